#include "matseq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "matseq/errors.hpp"

namespace matseq {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& QPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::InvalidInput, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  QPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {QPoly(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    Rational factor = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= divisor.degree(); ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  const Rational inv = 1 / leading();
  r *= inv;
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    const Rational a = abs(c);
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace matseq
