#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace matseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Univariate polynomial over the rationals, coefficients stored low-to-high.
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and `degree()` is -1 for it.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Rational& rhs);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(QPoly lhs, const QPoly& rhs) { return lhs *= rhs; }
  friend QPoly operator*(QPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const QPoly& lhs, const QPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  QPoly monic() const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace matseq
