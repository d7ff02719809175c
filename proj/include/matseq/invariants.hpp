#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "matseq/matcore.hpp"

namespace matseq {

/// tr(A_{j1} ... A_{jk}); indices are 0-based and may repeat. Throws BadIndex.
Scalar trace_word(const MatSeq& s, std::span<const std::size_t> word);

/// 2 tr(AB) - tr A tr B
Scalar tau(const Mat2& x, const Mat2& y);
/// det(AB - BA)
Scalar sigma(const Mat2& x, const Mat2& y);
/// tr(ABC - CBA)^2
Scalar big_delta(const Mat2& x, const Mat2& y, const Mat2& z);

// Closed forms in the (b, e, c) coordinates, used as cross-checks.
Scalar tau_explicit(const Mat2& x, const Mat2& y);
Scalar sigma_explicit(const Mat2& x, const Mat2& y);
/// det of the 3x3 matrix with rows (b_i, e_i, c_i), squared.
Scalar delta_explicit(const Mat2& x, const Mat2& y, const Mat2& z);
/// (tau(A,A) tau(B,B) - tau(A,B)^2) / 4; throws Char2Unsupported.
Scalar sigma_from_tau(const Mat2& x, const Mat2& y);
/// -det(Gram matrix of tau) / 4; throws Char2Unsupported.
Scalar delta_from_gram(const Mat2& x, const Mat2& y, const Mat2& z);

/// u_jk = 2 t_jk - t_j t_k (= tau(A_j, A_k)).
Scalar drensky_u(const MatSeq& s, std::size_t j, std::size_t k);
/// s_jkl = t_jkl - t_lkj
Scalar drensky_s(const MatSeq& s, std::size_t j, std::size_t k, std::size_t l);

struct RelationIndices {
  /// (a, b, c, d, e, f) for s_abc s_def + det(u_{xy})/4 = 0
  std::array<std::size_t, 6> product;
  /// (a, b, c, d, e) for u_ea s_bcd - u_eb s_acd + u_ec s_abd - u_ed s_abc = 0
  std::array<std::size_t, 5> alternating;
};

/// Values of the two relations (the first scaled by 4) at the given indices.
std::array<Scalar, 2> drensky_relation_values(const MatSeq& s, const RelationIndices& idx);
/// Both relations vanish. Throws Char2Unsupported.
bool check_drensky_relations(const MatSeq& s, const RelationIndices& idx);

}  // namespace matseq
