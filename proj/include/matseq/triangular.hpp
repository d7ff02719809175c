#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "matseq/matcore.hpp"

namespace matseq {

struct TriangularizationWitness {
  GroupElement g;
  /// conjugate(g, input); every term upper triangular.
  MatSeq triangular;
};

struct ReductionInfo {
  /// Smallest index of each commuting class of non-scalar terms (0-based).
  std::vector<std::size_t> kept;
  /// Partition of the non-scalar term indices into commuting classes, in the
  /// order of `kept`.
  std::vector<std::vector<std::size_t>> classes;

  std::size_t reduced_length() const noexcept { return kept.size(); }
  /// Every term is scalar; the reduced length is then 0.
  bool all_scalar() const noexcept { return kept.empty(); }
};

ReductionInfo maximal_reduction(const MatSeq& s);

/// Both eigenvalues when they lie in the ring, the first being (tr + r)/2 for
/// the canonical root r of the discriminant.
std::optional<std::array<Scalar, 2>> eigenvalues_in_ring(const Mat2& x);

/// Primitive generator of the eigenline of a non-scalar matrix for the
/// eigenvalue `lambda` (which must be an eigenvalue in the ring).
std::array<Scalar, 2> eigenvector(const Mat2& x, const Scalar& lambda);

/// Invertible P whose first column is the primitive vector `v` (completed by
/// Bezout over Z and Q[t]).
GroupElement basis_with_first_column(const std::array<Scalar, 2>& v);

std::optional<TriangularizationWitness> singlet_triangularizable(const Mat2& x);

bool pair_triangularizable(const Mat2& x, const Mat2& y);

/// Every term triangularizable on its own and all sigma, Delta vanish.
bool is_triangularizable(const MatSeq& s);

struct FastEngineStats {
  std::size_t sigma_evaluations = 0;
  std::size_t reduced_length = 0;
};

/// Test through the maximal reduction: the full criterion for reduced length
/// at most 3, otherwise only sigma against the first three kept terms.
bool is_triangularizable_fast(const MatSeq& s, FastEngineStats* stats = nullptr);

/// Throws InternalInconsistency if the decision says yes but no common
/// eigenvector is found.
std::optional<TriangularizationWitness> triangularize(const MatSeq& s);

bool is_commutative(const MatSeq& s);

}  // namespace matseq
