#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "matseq/errors.hpp"
#include "matseq/poly.hpp"

namespace matseq {

enum class RingKind { Integers, Rationals, PrimeField, QuadExt, UniPoly };

/// Descriptor of one of the supported integral domains: Z, Q, GF(p), Q(sqrt d)
/// and Q[t].
class Ring {
 public:
  Ring() = default;  // the integers

  static Ring integers();
  static Ring rationals();
  /// Throws NotPrime unless p is a prime below 2^32.
  static Ring prime_field(std::uint64_t p);
  /// `d` is reduced to a square-free integer representative; throws
  /// InvalidInput when d is zero or a rational square.
  static Ring quad_ext(const Rational& d);
  static Ring uni_poly();

  RingKind kind() const noexcept { return kind_; }
  /// Only meaningful for PrimeField.
  std::uint64_t modulus() const noexcept { return p_; }
  /// Only meaningful for QuadExt.
  const Integer& radicand() const;

  std::uint64_t characteristic() const noexcept { return kind_ == RingKind::PrimeField ? p_ : 0; }
  bool is_field() const noexcept {
    return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField || kind_ == RingKind::QuadExt;
  }
  /// Z -> Q, fields map to themselves. Q[t] has no supported fraction field.
  Ring fraction_field() const;

  std::string name() const;

  friend bool operator==(const Ring& x, const Ring& y);

 private:
  RingKind kind_ = RingKind::Integers;
  std::uint64_t p_ = 0;
  std::shared_ptr<const Integer> d_;
};

std::uint64_t characteristic(const Ring& r) noexcept;

/// Whether every element of `from` has a canonical image in `to`.
bool embeds_into(const Ring& from, const Ring& to);
/// Smallest supported ring containing both; throws RingMismatch otherwise.
Ring common_ring(const Ring& x, const Ring& y);

/// x + y*sqrt(d), d taken from the owning ring.
struct QuadValue {
  Rational x;
  Rational y;
  friend bool operator==(const QuadValue&, const QuadValue&) = default;
};

class Scalar {
 public:
  Scalar() : value_(Integer(0)) {}

  static Scalar integer(const Integer& v);
  static Scalar rational(const Rational& v);
  static Scalar residue(std::uint64_t p, const Integer& v);
  static Scalar quad(const Ring& r, const Rational& x, const Rational& y);
  static Scalar poly(const QPoly& v);

  /// Image of an integer in any ring.
  static Scalar from_integer(const Ring& r, const Integer& v);
  /// Image of a rational; throws NotDivisible over Z for non-integers and
  /// DivisionByZero over GF(p) when the denominator vanishes mod p.
  static Scalar from_rational(const Ring& r, const Rational& v);
  static Scalar zero(const Ring& r) { return from_integer(r, 0); }
  static Scalar one(const Ring& r) { return from_integer(r, 1); }

  const Ring& ring() const noexcept { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  /// Value accessors; each throws RingMismatch for the wrong ring kind.
  const Integer& as_integer() const;
  const Rational& as_rational() const;
  std::uint64_t as_residue() const;
  const QuadValue& as_quad() const;
  const QPoly& as_poly() const;

  /// True when the value lies in the prime subring image of Q (Z, Q, a
  /// QuadExt element with zero irrational part, or a constant polynomial).
  std::optional<Rational> rational_value() const;

  /// Sign for Z and Q values; throws UnsupportedRing elsewhere.
  int sign() const;

  Scalar promote(const Ring& target) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator*(Scalar lhs, long rhs) { return lhs *= from_integer(lhs.ring(), rhs); }
  friend Scalar operator*(long lhs, Scalar rhs) { return rhs *= from_integer(rhs.ring(), lhs); }

  /// Multiplicative inverse; throws NotUnit.
  Scalar inverse() const;
  /// Quotient q with q*rhs == *this; throws DivisionByZero or NotDivisible.
  Scalar exact_div(const Scalar& rhs) const;
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) { return lhs.exact_div(rhs); }

  /// Equality after promotion to a common ring; values in incompatible rings
  /// compare unequal.
  friend bool operator==(const Scalar& x, const Scalar& y);

  std::string to_string() const;

 private:
  using Value = std::variant<Integer, Rational, std::uint64_t, QuadValue, QPoly>;
  Scalar(Ring r, Value v) : ring_(std::move(r)), value_(std::move(v)) {}

  Ring ring_;
  Value value_;
};

/// Canonical square root in a field ring: nonnegative over Q, least residue
/// over GF(p), y > 0 then x >= 0 over Q(sqrt d). Throws UnsupportedRing for
/// Z and Q[t].
std::optional<Scalar> try_sqrt(const Scalar& x);

/// Square root inside the ring itself, for every ring kind (perfect squares
/// over Z, polynomial square roots over Q[t], `try_sqrt` for fields).
std::optional<Scalar> ring_sqrt(const Scalar& x);

struct Bezout {
  Scalar g;
  Scalar p;
  Scalar q;
};

/// g = gcd(x, y) = x*p + y*q with g nonnegative (Z), monic (Q[t]) or 1 in a
/// field; all three are zero when x = y = 0. Throws UnsupportedRing for
/// Q(sqrt d).
Bezout bezout(const Scalar& x, const Scalar& y);

bool is_coprime_pair(const Scalar& x, const Scalar& y);

/// Ring vector proportional to `v` whose entries have unit gcd. Rational
/// input is returned over Z. The first nonzero entry is made positive (Z),
/// monic (Q[t]) or 1 (other fields). Throws ZeroVector.
std::vector<Scalar> primitive_vector(std::span<const Scalar> v);

/// Square-free integer m with d = m * r^2 for some rational r, computed by
/// trial division plus a perfect-square test on the leftover cofactor.
Integer squarefree_part(const Rational& d);

bool is_prime(std::uint64_t p);

}  // namespace matseq
