#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "matseq/matcore.hpp"

namespace matseq {

inline constexpr std::uint64_t kOracleMaxPrime = 13;

/// All of GL2(GF(p)), entries (a, b, c, d) row-major, in lexicographic order.
struct GroupTable {
  std::uint64_t p = 0;
  std::vector<std::array<std::uint32_t, 4>> elements;

  std::size_t size() const noexcept { return elements.size(); }
  GroupElement element(std::size_t i) const;
};

/// Throws NotPrime, or TooLarge when p exceeds min(max_p, 13).
const GroupTable& enumerate_gl2(std::uint64_t p, std::uint64_t max_p = kOracleMaxPrime);

/// First g (in table order) making every term upper triangular.
std::optional<GroupElement> brute_triangularizable(const MatSeq& s, std::uint64_t max_p = kOracleMaxPrime);

/// First g (in table order) with g s1 g^-1 = s2.
std::optional<GroupElement> brute_similar(const MatSeq& s1, const MatSeq& s2,
                                          std::uint64_t max_p = kOracleMaxPrime);

}  // namespace matseq
