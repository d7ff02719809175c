#pragma once

#include <optional>
#include <vector>

#include "matseq/matcore.hpp"

namespace matseq {

/// A matrix g with g A_j = B_j g for all j and det g != 0. Over a field, or
/// when det g is a unit, g is an honest group element; otherwise (Z, Q[t]) it
/// only conjugates over the fraction field and `fraction_field` is set.
struct SimilarityWitness {
  Mat2 g;
  bool fraction_field = false;

  /// Throws NotUnit when `fraction_field` is set.
  GroupElement group_element() const { return GroupElement(g); }
};

/// Throws LengthMismatch or RingMismatch.
std::optional<SimilarityWitness> are_similar(const MatSeq& s1, const MatSeq& s2);

/// Similarity of every pair of corresponding subsequences of length <= 3.
bool triple_reduction_check(const MatSeq& s1, const MatSeq& s2);

/// Basis of the matrices commuting with every term, as (a, b, c, d) vectors.
std::vector<std::vector<Scalar>> centralizer_basis(const MatSeq& s);

/// Not triangularizable over the algebraic closure: some sigma or Delta is
/// nonzero. Throws UnsupportedRing outside fields.
bool is_stable(const MatSeq& s);

/// Stable, or commutative and diagonalizable over the algebraic closure.
/// Throws UnsupportedRing outside fields.
bool is_semisimple(const MatSeq& s);

struct PhiVector {
  Ring ring;
  std::size_t n = 0;
  /// t1, t11, t2, t22, t12, then t_k, t_1k, t_2k, s_12k for k >= 3.
  std::vector<Scalar> values;
  /// Semisimple with A_1 diagonalizable and [A_1, A_2] != 0; the map is only
  /// injective on such sequences.
  bool in_injectivity_domain = false;
};

/// Throws Char2Unsupported or LengthTooShort.
PhiVector phi_prime(const MatSeq& s);

struct PsiValue {
  Ring ring;
  /// t_k, t_1k for k = 1..n
  std::vector<Scalar> traces;
  /// [delta_12 : ... : delta_1n] with the first nonzero coordinate 1, or the
  /// full vector of delta_jk (j < k) when every delta_1k vanishes.
  std::vector<Scalar> proj;
  bool full_plucker = false;
  /// Triangularizable with A_1 diagonalizable and [A_1, A_2] != 0.
  bool in_two_to_one_domain = false;

  friend bool operator==(const PsiValue& x, const PsiValue& y) {
    return x.traces == y.traces && x.proj == y.proj && x.full_plucker == y.full_plucker;
  }
};

/// Integer input is lifted to Q. Throws NotTriangularizable, CommutativeInput,
/// Char2Unsupported, UnsupportedRing (Q[t]).
PsiValue psi_prime(const MatSeq& s);

/// delta_jk = b_j e_k - e_j b_k for j < k on an upper triangular sequence, in
/// lexicographic order of (j, k).
std::vector<Scalar> plucker_coordinates(const MatSeq& triangular);

}  // namespace matseq
