#include "matseq/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace matseq {

namespace {

using Entries = std::array<std::uint32_t, 4>;

std::uint64_t checked_prime(const Ring& r, std::uint64_t max_p) {
  if (r.kind() != RingKind::PrimeField) fail(ErrorCode::UnsupportedRing, "the oracle needs GF(p), got " + r.name());
  const std::uint64_t cap = std::min(max_p, kOracleMaxPrime);
  if (r.modulus() > cap) fail(ErrorCode::TooLarge, "GF(" + std::to_string(r.modulus()) + ") exceeds the oracle limit " + std::to_string(cap));
  return r.modulus();
}

std::vector<Entries> residues(const MatSeq& s) {
  std::vector<Entries> out;
  for (const auto& m : s)
    out.push_back({static_cast<std::uint32_t>(m.a().as_residue()), static_cast<std::uint32_t>(m.b().as_residue()),
                   static_cast<std::uint32_t>(m.c().as_residue()), static_cast<std::uint32_t>(m.d().as_residue())});
  return out;
}

}  // namespace

GroupElement GroupTable::element(std::size_t i) const {
  const Ring r = Ring::prime_field(p);
  const auto& e = elements.at(i);
  return GroupElement(Mat2::from_ints(r, e[0], e[1], e[2], e[3]));
}

const GroupTable& enumerate_gl2(std::uint64_t p, std::uint64_t max_p) {
  const std::uint64_t cap = std::min(max_p, kOracleMaxPrime);
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > cap) fail(ErrorCode::TooLarge, "GF(" + std::to_string(p) + ") exceeds the oracle limit " + std::to_string(cap));

  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[p];
  if (!slot) {
    auto t = std::make_unique<GroupTable>();
    t->p = p;
    const auto q = static_cast<std::uint32_t>(p);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          for (std::uint32_t d = 0; d < q; ++d)
            if ((a * d + (q - (b * c) % q)) % q != 0) t->elements.push_back({a, b, c, d});
    slot = std::move(t);
  }
  return *slot;
}

std::optional<GroupElement> brute_triangularizable(const MatSeq& s, std::uint64_t max_p) {
  const std::uint64_t p = checked_prime(s.ring(), max_p);
  const GroupTable& table = enumerate_gl2(p, max_p);
  const auto terms = residues(s);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& g = table.elements[i];
    // g^{-1} is adj(g)/det; only the lower-left entry of g A adj(g) matters.
    // (g A)_{2,*} = (c a_ + d c_, c b_ + d d_); adj(g) first column = (d, -c).
    bool ok = true;
    for (const auto& m : terms) {
      const std::uint64_t r0 = (std::uint64_t{g[2]} * m[0] + std::uint64_t{g[3]} * m[2]) % p;
      const std::uint64_t r1 = (std::uint64_t{g[2]} * m[1] + std::uint64_t{g[3]} * m[3]) % p;
      const std::uint64_t lower = (r0 * g[3] + r1 * ((p - g[2]) % p)) % p;
      if (lower != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return table.element(i);
  }
  return std::nullopt;
}

std::optional<GroupElement> brute_similar(const MatSeq& s1, const MatSeq& s2, std::uint64_t max_p) {
  if (s1.size() != s2.size()) fail(ErrorCode::LengthMismatch, "sequences of different length");
  if (!(s1.ring() == s2.ring())) fail(ErrorCode::RingMismatch, "sequences over different rings");
  const std::uint64_t p = checked_prime(s1.ring(), max_p);
  const GroupTable& table = enumerate_gl2(p, max_p);
  const auto x = residues(s1), y = residues(s2);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& g = table.elements[i];
    bool ok = true;
    for (std::size_t j = 0; j < x.size() && ok; ++j) {
      // g X == Y g
      const auto& a = x[j];
      const auto& b = y[j];
      for (int r = 0; r < 2 && ok; ++r)
        for (int c = 0; c < 2 && ok; ++c) {
          const std::uint64_t lhs = (std::uint64_t{g[2 * r]} * a[c] + std::uint64_t{g[2 * r + 1]} * a[2 + c]) % p;
          const std::uint64_t rhs = (std::uint64_t{b[2 * r]} * g[c] + std::uint64_t{b[2 * r + 1]} * g[2 + c]) % p;
          ok = lhs == rhs;
        }
    }
    if (ok) return table.element(i);
  }
  return std::nullopt;
}

}  // namespace matseq
