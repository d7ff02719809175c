#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "matseq/rings.hpp"

namespace matseq {

/// 2x2 matrix [[a, b], [c, d]]; the four entries always share one ring.
class Mat2 {
 public:
  Mat2() = default;
  /// Entries are promoted to their common ring (RingMismatch if none).
  Mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

  static Mat2 zero(const Ring& r);
  static Mat2 identity(const Ring& r);
  static Mat2 scalar(const Scalar& lambda);
  static Mat2 diag(const Scalar& x, const Scalar& y);
  static Mat2 from_ints(const Ring& r, long a, long b, long c, long d);

  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  const Scalar& c() const noexcept { return c_; }
  const Scalar& d() const noexcept { return d_; }
  const Ring& ring() const noexcept { return a_.ring(); }

  Scalar trace() const { return a_ + d_; }
  Scalar det() const { return a_ * d_ - b_ * c_; }
  /// tr^2 - 4 det
  Scalar disc() const;
  /// a - d
  Scalar e() const { return a_ - d_; }

  bool is_zero() const;
  bool is_scalar() const;
  bool is_diagonal() const;
  bool is_upper_triangular() const { return c_.is_zero(); }

  Mat2 adjugate() const;
  Mat2 promote(const Ring& r) const;

  Mat2 operator-() const;
  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Scalar& s, const Mat2& x);
  friend bool operator==(const Mat2& x, const Mat2& y);

  std::string to_string() const;

 private:
  Scalar a_, b_, c_, d_;
};

/// AB - BA
Mat2 commutator(const Mat2& x, const Mat2& y);

/// Nonempty finite sequence of matrices over a single ring.
class MatSeq {
 public:
  /// Throws EmptySequence or RingMismatch.
  explicit MatSeq(std::vector<Mat2> terms);

  std::size_t size() const noexcept { return terms_.size(); }
  const Mat2& operator[](std::size_t i) const { return terms_[i]; }
  const Mat2& at(std::size_t i) const;
  const std::vector<Mat2>& terms() const noexcept { return terms_; }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  const Ring& ring() const noexcept { return terms_.front().ring(); }

  std::vector<Scalar> a() const;
  std::vector<Scalar> b() const;
  std::vector<Scalar> c() const;
  std::vector<Scalar> d() const;
  std::vector<Scalar> e() const;

  bool is_upper_triangular() const;
  MatSeq promote(const Ring& r) const;

  friend bool operator==(const MatSeq& x, const MatSeq& y) { return x.terms_ == y.terms_; }

 private:
  std::vector<Mat2> terms_;
};

/// Invertible matrix; the determinant must be a unit of the ring.
class GroupElement {
 public:
  /// Throws NotUnit.
  explicit GroupElement(const Mat2& m);

  static GroupElement identity(const Ring& r) { return GroupElement(Mat2::identity(r)); }

  const Mat2& matrix() const noexcept { return m_; }
  const Mat2& inverse_matrix() const noexcept { return inv_; }
  GroupElement inverse() const { return GroupElement(inv_); }
  const Ring& ring() const noexcept { return m_.ring(); }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return GroupElement(x.m_ * y.m_);
  }
  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.m_ == y.m_; }

 private:
  Mat2 m_;
  Mat2 inv_;
};

Mat2 conjugate(const GroupElement& g, const Mat2& x);
/// (g A_1 g^-1, ..., g A_n g^-1)
MatSeq conjugate(const GroupElement& g, const MatSeq& s);

MatSeq concat(const MatSeq& x, const MatSeq& y);
/// `indices` are 0-based, strictly increasing and nonempty; throws BadIndex.
MatSeq subsequence(const MatSeq& s, std::span<const std::size_t> indices);

}  // namespace matseq
