#include "matseq/rings.hpp"

#include <algorithm>
#include <sstream>

namespace matseq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LengthTooShort: return "LengthTooShort";
    case ErrorCode::Char2Unsupported: return "Char2Unsupported";
    case ErrorCode::NotTriangularizable: return "NotTriangularizable";
    case ErrorCode::CommutativeInput: return "CommutativeInput";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotCanonical1a: return "NotCanonical1a";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::ZeroC2: return "ZeroC2";
    case ErrorCode::TowerTooDeep: return "TowerTooDeep";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return r;
}

u64 reduce(const Integer& v, u64 p) {
  Integer r = v % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// Tonelli-Shanks; returns some root or nullopt.
std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<QPoly> poly_sqrt(const QPoly& f) {
  if (f.is_zero()) return QPoly();
  if (f.degree() % 2 != 0) return std::nullopt;
  auto lead = rational_sqrt(f.leading());
  if (!lead) return std::nullopt;
  const int m = f.degree() / 2;
  std::vector<Rational> r(static_cast<std::size_t>(m) + 1);
  r[static_cast<std::size_t>(m)] = *lead;
  for (int k = 1; k <= m; ++k) {
    // coefficient of t^(2m-k) in r^2 is 2 r_m r_{m-k} + sum of products of already known terms
    Rational acc = f.coeff(2 * m - k);
    for (int i = m - k + 1; i <= m - 1; ++i) {
      const int j = 2 * m - k - i;
      if (j <= m - 1 && j >= m - k + 1) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
    }
    r[static_cast<std::size_t>(m - k)] = acc / (2 * r[static_cast<std::size_t>(m)]);
  }
  QPoly root(std::move(r));
  if (root * root != f) return std::nullopt;
  return root;
}

// Extended Euclid over Q[t]; returns (g, p, q) with g monic.
Bezout poly_bezout(const QPoly& x, const QPoly& y) {
  QPoly r0 = x, r1 = y;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly s2 = s0 - quot * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - quot * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Scalar::poly(QPoly()), Scalar::poly(QPoly()), Scalar::poly(QPoly())};
  const Rational inv = 1 / r0.leading();
  return {Scalar::poly(r0 * inv), Scalar::poly(s0 * inv), Scalar::poly(t0 * inv)};
}

}  // namespace

// ---- Ring ------------------------------------------------------------------

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

Integer squarefree_part(const Rational& d) {
  if (d == 0) fail(ErrorCode::InvalidInput, "zero has no square-free part");
  Integer n = d.get_num() * d.get_den();
  const int s = sgn(n);
  n = abs(n);
  Integer out = 1;
  for (unsigned long f = 2; f <= 100000 && Integer(f) * f <= n; f += (f == 2 ? 1 : 2)) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
      n /= f;
      ++e;
    }
    if (e % 2) out *= f;
  }
  if (!mpz_perfect_square_p(n.get_mpz_t())) out *= n;
  return s < 0 ? Integer(-out) : out;
}

Ring Ring::integers() { return Ring(); }

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::Rationals;
  return r;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  Ring r;
  r.kind_ = RingKind::PrimeField;
  r.p_ = p;
  return r;
}

Ring Ring::quad_ext(const Rational& d) {
  if (d == 0) fail(ErrorCode::InvalidInput, "quadratic extension by sqrt(0)");
  Integer m = squarefree_part(d);
  if (m == 1) fail(ErrorCode::InvalidInput, "quadratic extension by a rational square");
  Ring r;
  r.kind_ = RingKind::QuadExt;
  r.d_ = std::make_shared<const Integer>(m);
  return r;
}

Ring Ring::uni_poly() {
  Ring r;
  r.kind_ = RingKind::UniPoly;
  return r;
}

const Integer& Ring::radicand() const {
  if (kind_ != RingKind::QuadExt) fail(ErrorCode::RingMismatch, "radicand of a non-quadratic ring");
  return *d_;
}

Ring Ring::fraction_field() const {
  switch (kind_) {
    case RingKind::Integers: return rationals();
    case RingKind::UniPoly: fail(ErrorCode::UnsupportedRing, "Q(t) is not a supported ring");
    default: return *this;
  }
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
    case RingKind::QuadExt: return "Q(sqrt(" + d_->get_str() + "))";
    case RingKind::UniPoly: return "Q[t]";
  }
  return "?";
}

bool operator==(const Ring& x, const Ring& y) {
  if (x.kind_ != y.kind_) return false;
  if (x.kind_ == RingKind::PrimeField) return x.p_ == y.p_;
  if (x.kind_ == RingKind::QuadExt) return *x.d_ == *y.d_;
  return true;
}

std::uint64_t characteristic(const Ring& r) noexcept { return r.characteristic(); }

bool embeds_into(const Ring& from, const Ring& to) {
  if (from == to) return true;
  switch (from.kind()) {
    case RingKind::Integers: return true;
    case RingKind::Rationals: return to.kind() == RingKind::QuadExt || to.kind() == RingKind::UniPoly;
    default: return false;
  }
}

Ring common_ring(const Ring& x, const Ring& y) {
  if (embeds_into(x, y)) return y;
  if (embeds_into(y, x)) return x;
  fail(ErrorCode::RingMismatch, x.name() + " and " + y.name() + " have no common supported ring");
}

// ---- Scalar ----------------------------------------------------------------

Scalar Scalar::integer(const Integer& v) { return Scalar(Ring::integers(), v); }

Scalar Scalar::rational(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return Scalar(Ring::rationals(), c);
}

Scalar Scalar::residue(std::uint64_t p, const Integer& v) {
  Ring r = Ring::prime_field(p);
  return Scalar(r, reduce(v, p));
}

Scalar Scalar::quad(const Ring& r, const Rational& x, const Rational& y) {
  if (r.kind() != RingKind::QuadExt) fail(ErrorCode::RingMismatch, "quadratic value in " + r.name());
  QuadValue q{x, y};
  q.x.canonicalize();
  q.y.canonicalize();
  return Scalar(r, q);
}

Scalar Scalar::poly(const QPoly& v) { return Scalar(Ring::uni_poly(), v); }

Scalar Scalar::from_integer(const Ring& r, const Integer& v) {
  switch (r.kind()) {
    case RingKind::Integers: return Scalar(r, v);
    case RingKind::Rationals: return Scalar(r, Rational(v));
    case RingKind::PrimeField: return Scalar(r, reduce(v, r.modulus()));
    case RingKind::QuadExt: return Scalar(r, QuadValue{Rational(v), Rational(0)});
    case RingKind::UniPoly: return Scalar(r, QPoly::constant(Rational(v)));
  }
  fail(ErrorCode::InternalInconsistency, "unknown ring kind");
}

Scalar Scalar::from_rational(const Ring& r, const Rational& v) {
  Rational c = v;
  c.canonicalize();
  switch (r.kind()) {
    case RingKind::Integers:
      if (c.get_den() != 1) fail(ErrorCode::NotDivisible, c.get_str() + " is not an integer");
      return Scalar(r, c.get_num());
    case RingKind::Rationals: return Scalar(r, c);
    case RingKind::PrimeField: {
      const u64 p = r.modulus();
      const u64 den = reduce(c.get_den(), p);
      if (den == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
      return Scalar(r, mulmod(reduce(c.get_num(), p), powmod(den, p - 2, p), p));
    }
    case RingKind::QuadExt: return Scalar(r, QuadValue{c, Rational(0)});
    case RingKind::UniPoly: return Scalar(r, QPoly::constant(c));
  }
  fail(ErrorCode::InternalInconsistency, "unknown ring kind");
}

bool Scalar::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return std::get<Integer>(value_) == 0;
    case RingKind::Rationals: return std::get<Rational>(value_) == 0;
    case RingKind::PrimeField: return std::get<u64>(value_) == 0;
    case RingKind::QuadExt: {
      const auto& q = std::get<QuadValue>(value_);
      return q.x == 0 && q.y == 0;
    }
    case RingKind::UniPoly: return std::get<QPoly>(value_).is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return abs(std::get<Integer>(value_)) == 1;
    case RingKind::UniPoly: {
      const auto& f = std::get<QPoly>(value_);
      return f.degree() == 0;
    }
    default: return !is_zero();
  }
}

const Integer& Scalar::as_integer() const {
  if (ring_.kind() != RingKind::Integers) fail(ErrorCode::RingMismatch, "expected an integer, got " + ring_.name());
  return std::get<Integer>(value_);
}

const Rational& Scalar::as_rational() const {
  if (ring_.kind() != RingKind::Rationals) fail(ErrorCode::RingMismatch, "expected a rational, got " + ring_.name());
  return std::get<Rational>(value_);
}

std::uint64_t Scalar::as_residue() const {
  if (ring_.kind() != RingKind::PrimeField) fail(ErrorCode::RingMismatch, "expected a residue, got " + ring_.name());
  return std::get<u64>(value_);
}

const QuadValue& Scalar::as_quad() const {
  if (ring_.kind() != RingKind::QuadExt) fail(ErrorCode::RingMismatch, "expected a quadratic value, got " + ring_.name());
  return std::get<QuadValue>(value_);
}

const QPoly& Scalar::as_poly() const {
  if (ring_.kind() != RingKind::UniPoly) fail(ErrorCode::RingMismatch, "expected a polynomial, got " + ring_.name());
  return std::get<QPoly>(value_);
}

std::optional<Rational> Scalar::rational_value() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return Rational(std::get<Integer>(value_));
    case RingKind::Rationals: return std::get<Rational>(value_);
    case RingKind::PrimeField: return std::nullopt;
    case RingKind::QuadExt: {
      const auto& q = std::get<QuadValue>(value_);
      if (q.y != 0) return std::nullopt;
      return q.x;
    }
    case RingKind::UniPoly: {
      const auto& f = std::get<QPoly>(value_);
      if (f.degree() > 0) return std::nullopt;
      return f.coeff(0);
    }
  }
  return std::nullopt;
}

int Scalar::sign() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return sgn(std::get<Integer>(value_));
    case RingKind::Rationals: return sgn(std::get<Rational>(value_));
    default: fail(ErrorCode::UnsupportedRing, "sign is not defined over " + ring_.name());
  }
}

Scalar Scalar::promote(const Ring& target) const {
  if (ring_ == target) return *this;
  if (!embeds_into(ring_, target)) fail(ErrorCode::RingMismatch, "cannot map " + ring_.name() + " into " + target.name());
  if (ring_.kind() == RingKind::Integers) return from_integer(target, std::get<Integer>(value_));
  return from_rational(target, std::get<Rational>(value_));
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return Scalar(ring_, Integer(-std::get<Integer>(value_)));
    case RingKind::Rationals: return Scalar(ring_, Rational(-std::get<Rational>(value_)));
    case RingKind::PrimeField: {
      const u64 v = std::get<u64>(value_);
      return Scalar(ring_, v == 0 ? u64{0} : ring_.modulus() - v);
    }
    case RingKind::QuadExt: {
      const auto& q = std::get<QuadValue>(value_);
      return Scalar(ring_, QuadValue{-q.x, -q.y});
    }
    case RingKind::UniPoly: return Scalar(ring_, -std::get<QPoly>(value_));
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (!(ring_ == rhs.ring_)) {
    Ring r = common_ring(ring_, rhs.ring_);
    *this = promote(r);
    return *this += rhs.promote(r);
  }
  switch (ring_.kind()) {
    case RingKind::Integers: std::get<Integer>(value_) += std::get<Integer>(rhs.value_); break;
    case RingKind::Rationals: std::get<Rational>(value_) += std::get<Rational>(rhs.value_); break;
    case RingKind::PrimeField: {
      auto& v = std::get<u64>(value_);
      v = (v + std::get<u64>(rhs.value_)) % ring_.modulus();
      break;
    }
    case RingKind::QuadExt: {
      auto& q = std::get<QuadValue>(value_);
      const auto& o = std::get<QuadValue>(rhs.value_);
      q.x += o.x;
      q.y += o.y;
      break;
    }
    case RingKind::UniPoly: std::get<QPoly>(value_) += std::get<QPoly>(rhs.value_); break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!(ring_ == rhs.ring_)) {
    Ring r = common_ring(ring_, rhs.ring_);
    *this = promote(r);
    return *this *= rhs.promote(r);
  }
  switch (ring_.kind()) {
    case RingKind::Integers: std::get<Integer>(value_) *= std::get<Integer>(rhs.value_); break;
    case RingKind::Rationals: std::get<Rational>(value_) *= std::get<Rational>(rhs.value_); break;
    case RingKind::PrimeField: {
      auto& v = std::get<u64>(value_);
      v = mulmod(v, std::get<u64>(rhs.value_), ring_.modulus());
      break;
    }
    case RingKind::QuadExt: {
      auto& q = std::get<QuadValue>(value_);
      const auto& o = std::get<QuadValue>(rhs.value_);
      const Rational d(ring_.radicand());
      Rational x = q.x * o.x + d * q.y * o.y;
      Rational y = q.x * o.y + q.y * o.x;
      q.x = std::move(x);
      q.y = std::move(y);
      break;
    }
    case RingKind::UniPoly: std::get<QPoly>(value_) *= std::get<QPoly>(rhs.value_); break;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) fail(ErrorCode::NotUnit, to_string() + " is not a unit in " + ring_.name());
  switch (ring_.kind()) {
    case RingKind::Integers: return *this;
    case RingKind::Rationals: return Scalar(ring_, Rational(1 / std::get<Rational>(value_)));
    case RingKind::PrimeField: {
      const u64 p = ring_.modulus();
      return Scalar(ring_, powmod(std::get<u64>(value_), p - 2, p));
    }
    case RingKind::QuadExt: {
      const auto& q = std::get<QuadValue>(value_);
      const Rational norm = q.x * q.x - Rational(ring_.radicand()) * q.y * q.y;
      return Scalar(ring_, QuadValue{q.x / norm, -q.y / norm});
    }
    case RingKind::UniPoly: {
      const Rational c = 1 / std::get<QPoly>(value_).coeff(0);
      return Scalar(ring_, QPoly::constant(c));
    }
  }
  return *this;
}

Scalar Scalar::exact_div(const Scalar& rhs) const {
  if (!(ring_ == rhs.ring_)) {
    Ring r = common_ring(ring_, rhs.ring_);
    return promote(r).exact_div(rhs.promote(r));
  }
  if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division of " + to_string() + " by zero");
  switch (ring_.kind()) {
    case RingKind::Integers: {
      const auto& n = std::get<Integer>(value_);
      const auto& m = std::get<Integer>(rhs.value_);
      if (!mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()))
        fail(ErrorCode::NotDivisible, m.get_str() + " does not divide " + n.get_str());
      Integer q;
      mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
      return Scalar(ring_, q);
    }
    case RingKind::UniPoly: {
      auto [quot, rem] = std::get<QPoly>(value_).divmod(std::get<QPoly>(rhs.value_));
      if (!rem.is_zero()) fail(ErrorCode::NotDivisible, rhs.to_string() + " does not divide " + to_string());
      return Scalar(ring_, quot);
    }
    default: return *this * rhs.inverse();
  }
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (!(x.ring_ == y.ring_)) {
    if (embeds_into(x.ring_, y.ring_)) return x.promote(y.ring_) == y;
    if (embeds_into(y.ring_, x.ring_)) return x == y.promote(x.ring_);
    return false;
  }
  return x.value_ == y.value_;
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::Integers: return std::get<Integer>(value_).get_str();
    case RingKind::Rationals: return std::get<Rational>(value_).get_str();
    case RingKind::PrimeField: return std::to_string(std::get<u64>(value_));
    case RingKind::QuadExt: {
      const auto& q = std::get<QuadValue>(value_);
      const std::string root = "sqrt(" + ring_.radicand().get_str() + ")";
      if (q.y == 0) return q.x.get_str();
      std::string ys = q.y == 1 ? root : q.y == -1 ? "-" + root : q.y.get_str() + "*" + root;
      if (q.x == 0) return ys;
      if (ys[0] == '-') return q.x.get_str() + " - " + ys.substr(1);
      return q.x.get_str() + " + " + ys;
    }
    case RingKind::UniPoly: return std::get<QPoly>(value_).to_string();
  }
  return "?";
}

// ---- square roots, gcd -----------------------------------------------------

std::optional<Scalar> try_sqrt(const Scalar& x) {
  const Ring& r = x.ring();
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::UniPoly:
      fail(ErrorCode::UnsupportedRing, "square roots need a field, got " + r.name());
    case RingKind::Rationals: {
      auto s = rational_sqrt(x.as_rational());
      if (!s) return std::nullopt;
      return Scalar::rational(*s);
    }
    case RingKind::PrimeField: {
      const u64 p = r.modulus();
      auto s = sqrt_mod(x.as_residue(), p);
      if (!s) return std::nullopt;
      u64 root = *s;
      if (p != 2 && root > (p - 1) / 2) root = p - root;
      return Scalar::residue(p, Integer(static_cast<unsigned long>(root)));
    }
    case RingKind::QuadExt: {
      const auto& q = x.as_quad();
      const Rational d(r.radicand());
      if (q.y == 0) {
        if (auto s = rational_sqrt(q.x)) return Scalar::quad(r, *s, 0);
        if (auto s = rational_sqrt(q.x / d)) return Scalar::quad(r, 0, *s);
        return std::nullopt;
      }
      // (a + b sqrt d)^2 = u + v sqrt d  <=>  a^2 + d b^2 = u, 2ab = v
      auto n = rational_sqrt(q.x * q.x - d * q.y * q.y);
      if (!n) return std::nullopt;
      for (const Rational& cand : {Rational((q.x + *n) / 2), Rational((q.x - *n) / 2)}) {
        auto a = rational_sqrt(cand);
        if (!a || *a == 0) continue;
        Rational b = q.y / (2 * *a);
        Rational aa = *a;
        if (sgn(b) < 0) {
          b = -b;
          aa = -aa;
        }
        Scalar root = Scalar::quad(r, aa, b);
        if (root * root == x) return root;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Scalar> ring_sqrt(const Scalar& x) {
  switch (x.ring().kind()) {
    case RingKind::Integers: {
      const Integer& v = x.as_integer();
      if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) return std::nullopt;
      return Scalar::integer(sqrt(v));
    }
    case RingKind::UniPoly: {
      auto s = poly_sqrt(x.as_poly());
      if (!s) return std::nullopt;
      return Scalar::poly(*s);
    }
    default: return try_sqrt(x);
  }
}

Bezout bezout(const Scalar& x0, const Scalar& y0) {
  const Ring r = common_ring(x0.ring(), y0.ring());
  const Scalar x = x0.promote(r), y = y0.promote(r);
  switch (r.kind()) {
    case RingKind::Integers: {
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.as_integer().get_mpz_t(), y.as_integer().get_mpz_t());
      return {Scalar::integer(g), Scalar::integer(s), Scalar::integer(t)};
    }
    case RingKind::UniPoly: return poly_bezout(x.as_poly(), y.as_poly());
    case RingKind::QuadExt:
      fail(ErrorCode::UnsupportedRing, "bezout is not provided over " + r.name());
    default: {
      const Scalar zero = Scalar::zero(r);
      if (!x.is_zero()) return {Scalar::one(r), x.inverse(), zero};
      if (!y.is_zero()) return {Scalar::one(r), zero, y.inverse()};
      return {zero, zero, zero};
    }
  }
}

bool is_coprime_pair(const Scalar& x, const Scalar& y) {
  const Ring r = common_ring(x.ring(), y.ring());
  if (r.is_field()) return !x.is_zero() || !y.is_zero();
  return bezout(x, y).g.is_unit();
}

std::vector<Scalar> primitive_vector(std::span<const Scalar> v) {
  if (v.empty()) fail(ErrorCode::ZeroVector, "empty vector");
  Ring r = v[0].ring();
  for (const auto& s : v) r = common_ring(r, s.ring());
  if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); }))
    fail(ErrorCode::ZeroVector, "primitive part of the zero vector");

  std::vector<Scalar> out;
  out.reserve(v.size());
  if (r.kind() == RingKind::Integers || r.kind() == RingKind::Rationals) {
    Integer l = 1;
    for (const auto& s : v) l = lcm(l, s.promote(Ring::rationals()).as_rational().get_den());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& s : v) {
      Rational q = s.promote(Ring::rationals()).as_rational() * l;
      ints.push_back(q.get_num());
      g = gcd(g, ints.back());
    }
    int sign = 0;
    for (const auto& n : ints)
      if (n != 0) {
        sign = sgn(n);
        break;
      }
    for (auto& n : ints) out.push_back(Scalar::integer(Integer(n / g * sign)));
    return out;
  }
  if (r.kind() == RingKind::UniPoly) {
    Scalar g = Scalar::zero(r);
    for (const auto& s : v) g = bezout(g, s.promote(r)).g;
    Scalar lead_inv;
    bool have = false;
    for (const auto& s : v) {
      Scalar q = s.promote(r).exact_div(g);
      if (!have && !q.is_zero()) {
        lead_inv = Scalar::poly(QPoly::constant(1 / q.as_poly().leading()));
        have = true;
      }
      out.push_back(q);
    }
    for (auto& s : out) s *= lead_inv;
    return out;
  }
  Scalar first;
  for (const auto& s : v)
    if (!s.is_zero()) {
      first = s.promote(r).inverse();
      break;
    }
  for (const auto& s : v) out.push_back(s.promote(r) * first);
  return out;
}

}  // namespace matseq
