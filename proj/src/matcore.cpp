#include "matseq/matcore.hpp"

namespace matseq {

Mat2::Mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Ring r = common_ring(common_ring(a.ring(), b.ring()), common_ring(c.ring(), d.ring()));
  a_ = a.promote(r);
  b_ = b.promote(r);
  c_ = c.promote(r);
  d_ = d.promote(r);
}

Mat2 Mat2::zero(const Ring& r) {
  const Scalar z = Scalar::zero(r);
  return Mat2(z, z, z, z);
}

Mat2 Mat2::identity(const Ring& r) { return scalar(Scalar::one(r)); }

Mat2 Mat2::scalar(const Scalar& lambda) { return diag(lambda, lambda); }

Mat2 Mat2::diag(const Scalar& x, const Scalar& y) {
  const Scalar z = Scalar::zero(common_ring(x.ring(), y.ring()));
  return Mat2(x, z, z, y);
}

Mat2 Mat2::from_ints(const Ring& r, long a, long b, long c, long d) {
  return Mat2(Scalar::from_integer(r, a), Scalar::from_integer(r, b), Scalar::from_integer(r, c),
              Scalar::from_integer(r, d));
}

Scalar Mat2::disc() const {
  const Scalar t = trace();
  return t * t - 4 * det();
}

bool Mat2::is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
bool Mat2::is_scalar() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }
bool Mat2::is_diagonal() const { return b_.is_zero() && c_.is_zero(); }

Mat2 Mat2::adjugate() const { return Mat2(d_, -b_, -c_, a_); }

Mat2 Mat2::promote(const Ring& r) const { return Mat2(a_.promote(r), b_.promote(r), c_.promote(r), d_.promote(r)); }

Mat2 Mat2::operator-() const { return Mat2(-a_, -b_, -c_, -d_); }

Mat2 operator+(const Mat2& x, const Mat2& y) { return Mat2(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_); }
Mat2 operator-(const Mat2& x, const Mat2& y) { return Mat2(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
              x.c_ * y.b_ + x.d_ * y.d_);
}

Mat2 operator*(const Scalar& s, const Mat2& x) { return Mat2(s * x.a_, s * x.b_, s * x.c_, s * x.d_); }

bool operator==(const Mat2& x, const Mat2& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string Mat2::to_string() const {
  return "[[" + a_.to_string() + ", " + b_.to_string() + "], [" + c_.to_string() + ", " + d_.to_string() + "]]";
}

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

// ---- MatSeq ----------------------------------------------------------------

MatSeq::MatSeq(std::vector<Mat2> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) fail(ErrorCode::EmptySequence, "a matrix sequence needs at least one term");
  for (const auto& m : terms_)
    if (!(m.ring() == terms_.front().ring()))
      fail(ErrorCode::RingMismatch, "terms over " + m.ring().name() + " and " + terms_.front().ring().name());
}

const Mat2& MatSeq::at(std::size_t i) const {
  if (i >= terms_.size()) fail(ErrorCode::BadIndex, "index " + std::to_string(i) + " out of range");
  return terms_[i];
}

namespace {
template <class F>
std::vector<Scalar> column(const std::vector<Mat2>& terms, F f) {
  std::vector<Scalar> out;
  out.reserve(terms.size());
  for (const auto& m : terms) out.push_back(f(m));
  return out;
}
}  // namespace

std::vector<Scalar> MatSeq::a() const { return column(terms_, [](const Mat2& m) { return m.a(); }); }
std::vector<Scalar> MatSeq::b() const { return column(terms_, [](const Mat2& m) { return m.b(); }); }
std::vector<Scalar> MatSeq::c() const { return column(terms_, [](const Mat2& m) { return m.c(); }); }
std::vector<Scalar> MatSeq::d() const { return column(terms_, [](const Mat2& m) { return m.d(); }); }
std::vector<Scalar> MatSeq::e() const { return column(terms_, [](const Mat2& m) { return m.e(); }); }

bool MatSeq::is_upper_triangular() const {
  for (const auto& m : terms_)
    if (!m.is_upper_triangular()) return false;
  return true;
}

MatSeq MatSeq::promote(const Ring& r) const {
  std::vector<Mat2> out;
  out.reserve(terms_.size());
  for (const auto& m : terms_) out.push_back(m.promote(r));
  return MatSeq(std::move(out));
}

// ---- GroupElement ----------------------------------------------------------

GroupElement::GroupElement(const Mat2& m) : m_(m) {
  const Scalar det = m.det();
  if (!det.is_unit()) fail(ErrorCode::NotUnit, "determinant " + det.to_string() + " is not a unit in " + m.ring().name());
  inv_ = det.inverse() * m.adjugate();
}

Mat2 conjugate(const GroupElement& g, const Mat2& x) { return g.matrix() * x * g.inverse_matrix(); }

MatSeq conjugate(const GroupElement& g, const MatSeq& s) {
  const Ring r = common_ring(g.ring(), s.ring());
  std::vector<Mat2> out;
  out.reserve(s.size());
  for (const auto& m : s) out.push_back(conjugate(g, m).promote(r));
  return MatSeq(std::move(out));
}

MatSeq concat(const MatSeq& x, const MatSeq& y) {
  if (!(x.ring() == y.ring())) fail(ErrorCode::RingMismatch, "concatenating " + x.ring().name() + " and " + y.ring().name());
  std::vector<Mat2> out = x.terms();
  out.insert(out.end(), y.begin(), y.end());
  return MatSeq(std::move(out));
}

MatSeq subsequence(const MatSeq& s, std::span<const std::size_t> indices) {
  if (indices.empty()) fail(ErrorCode::BadIndex, "empty index list");
  std::vector<Mat2> out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= s.size()) fail(ErrorCode::BadIndex, "index " + std::to_string(indices[k]) + " out of range");
    if (k > 0 && indices[k] <= indices[k - 1]) fail(ErrorCode::BadIndex, "indices must be strictly increasing");
    out.push_back(s[indices[k]]);
  }
  return MatSeq(std::move(out));
}

}  // namespace matseq
