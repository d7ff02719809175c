#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "matseq/matcore.hpp"
#include "matseq/similarity.hpp"

namespace matseq {

enum class CanonicalTag { Stable1a, Stable1b, Stable1c, Tri2a, Tri2b, CommDiagonal, CommJordanLike, AllScalar };

std::string_view to_string(CanonicalTag tag) noexcept;
std::optional<CanonicalTag> parse_canonical_tag(std::string_view name) noexcept;

/// Tag plus the term rearrangement used to reach the canonical form: the
/// selected terms in their new order, followed by the remaining ones.
struct Classification {
  CanonicalTag tag;
  std::vector<std::size_t> permutation;
};

/// Field rings only (UnsupportedRing otherwise).
Classification classify_with_permutation(const MatSeq& s);
CanonicalTag classify(const MatSeq& s);

struct CanonicalResult {
  CanonicalTag tag;
  /// form[i] = g * input[permutation[i]] * g^-1
  std::vector<std::size_t> permutation;
  MatSeq form;
  GroupElement g;
  /// Set when a square root forced a quadratic extension of the input field.
  std::optional<Ring> extension;
};

/// Needs a field of characteristic != 2. May adjoin one square root to Q;
/// a further one fails with TowerTooDeep, and GF(p) non-squares fail with
/// UnsupportedRing.
CanonicalResult canonicalize(const MatSeq& s);

/// Similarity of commutative sequences via their diagonal or Jordan-like
/// forms. Throws NotCommutative.
bool commutative_similar(const MatSeq& s1, const MatSeq& s2);

/// Conjugation by [[0, 1/x], [-x, 0]] with x^2 = -c_2, swapping the diagonal of
/// A_1. Throws NotCanonical1a unless A_1 is diagonal non-scalar, b_2 = 1 and
/// c_2 != 0.
MatSeq dual_sequence(const MatSeq& s);

/// Form 1a sequence whose reduced invariant vector is `v`.
MatSeq reconstruct_semisimple(const PhiVector& v);

/// The two upper triangular sequences (e and -e) with triangular invariant `w`;
/// the first has a_1 - d_1 equal to the canonical square root.
std::pair<MatSeq, MatSeq> reconstruct_triangular(const PsiValue& w);

enum class DesingularizationKind { Pair1b, Triple1c };

struct Desingularization {
  DesingularizationKind kind;
  std::vector<std::size_t> permutation;
};

/// 1b: (A1 - A2, A1 + A2, ...); 1c: (A1, A2 + A3, A2 - A3, ...), after the
/// rearrangement chosen by `classify`. Throws NotApplicable for other tags.
std::pair<MatSeq, Desingularization> desingularize_for_reconstruction(const MatSeq& s);
MatSeq undo_desingularization(const MatSeq& t, const Desingularization& how);

}  // namespace matseq
