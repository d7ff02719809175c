#include <gtest/gtest.h>

#include "matseq/canonical.hpp"
#include "matseq/invariants.hpp"
#include "matseq/oracle.hpp"
#include "matseq/similarity.hpp"
#include "matseq/triangular.hpp"
#include "support/generators.hpp"

using namespace matseq;
using testsupport::random_group_element;
using testsupport::random_mat;
using testsupport::random_seq;
using testsupport::random_upper_seq;
using testsupport::uniform;

namespace {
const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();
const Ring GF3 = Ring::prime_field(3);
Mat2 qm(long a, long b, long c, long d) { return Mat2::from_ints(Q, a, b, c, d); }
MatSeq seq(std::vector<Mat2> t) { return MatSeq(std::move(t)); }
std::vector<Scalar> qs(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar::rational(x));
  return out;
}
}  // namespace

TEST(AreSimilar, Examples) {
  auto w = are_similar(seq({qm(1, 0, 0, 0)}), seq({qm(0, 0, 0, 1)}));
  ASSERT_TRUE(w);
  // the conjugator is determined up to the centralizer of diag(1,0); it must
  // swap the coordinate axes
  EXPECT_TRUE(w->g.a().is_zero());
  EXPECT_TRUE(w->g.d().is_zero());
  EXPECT_EQ(conjugate(w->group_element(), seq({qm(1, 0, 0, 0)})), seq({qm(0, 0, 0, 1)}));

  EXPECT_FALSE(are_similar(seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0)}), seq({qm(1, 0, 0, 0), qm(0, 0, 1, 0)})));
  // Jordan block vs zero matrix: same trace and determinant
  EXPECT_FALSE(are_similar(seq({qm(0, 1, 0, 0)}), seq({qm(0, 0, 0, 0)})));
  EXPECT_THROW(are_similar(seq({qm(1, 0, 0, 0)}), seq({qm(1, 0, 0, 0), qm(1, 0, 0, 0)})), Error);
  EXPECT_THROW(are_similar(seq({qm(1, 0, 0, 0)}), seq({Mat2::from_ints(Z, 1, 0, 0, 0)})), Error);
}

TEST(AreSimilar, RandomConjugatesOnEveryRing) {
  std::mt19937_64 rng(11);
  for (const Ring& r : testsupport::all_test_rings()) {
    for (int i = 0; i < 60; ++i) {
      MatSeq s = random_seq(rng, r, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
      MatSeq t = conjugate(random_group_element(rng, r), s);
      auto w = are_similar(s, t);
      ASSERT_TRUE(w) << r.name();
      for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(w->g * s[j], t[j] * w->g);
      EXPECT_FALSE(w->g.det().is_zero());
      if (r.is_field()) {
        EXPECT_FALSE(w->fraction_field);
        EXPECT_EQ(conjugate(w->group_element(), s), t);
      }
    }
  }
}

TEST(AreSimilar, IntegerWitnessMayNeedFractions) {
  // [[1,1],[0,3]] has eigenvectors (1,0) and (1,2); any integral conjugator
  // from diag(1,3) has even determinant
  const MatSeq s = seq({Mat2::from_ints(Z, 1, 0, 0, 3)});
  auto w = are_similar(s, seq({Mat2::from_ints(Z, 1, 1, 0, 3)}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->g * s[0], Mat2::from_ints(Z, 1, 1, 0, 3) * w->g);
  EXPECT_TRUE(w->fraction_field);
  EXPECT_THROW(w->group_element(), Error);
}

TEST(AreSimilar, AgreesWithOracleOverGF3) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1500; ++i) {
    MatSeq s = random_seq(rng, GF3, 3, 0);
    MatSeq t = uniform(rng, 0, 2) == 0 ? random_seq(rng, GF3, 3, 0) : conjugate(random_group_element(rng, GF3), s);
    if (uniform(rng, 0, 3) == 0) {
      auto terms = t.terms();
      terms[2] = random_mat(rng, GF3, 0);
      t = MatSeq(terms);
    }
    EXPECT_EQ(are_similar(s, t).has_value(), brute_similar(s, t).has_value());
  }
}

TEST(TripleReduction, MatchesSimilarity) {
  std::mt19937_64 rng(13);
  const MatSeq s = random_seq(rng, Q, 4, 3);
  EXPECT_TRUE(triple_reduction_check(s, s));
  auto terms = s.terms();
  terms[3] = terms[3] + Mat2::scalar(Scalar::rational(1));
  EXPECT_FALSE(triple_reduction_check(s, MatSeq(terms)));

  for (int i = 0; i < 400; ++i) {
    MatSeq a = random_seq(rng, GF3, 5, 0);
    MatSeq b = uniform(rng, 0, 1) ? conjugate(random_group_element(rng, GF3), a) : random_seq(rng, GF3, 5, 0);
    EXPECT_EQ(triple_reduction_check(a, b), are_similar(a, b).has_value());
  }
}

TEST(Centralizer, NonCommutingPairFixesOnlyScalars) {
  std::mt19937_64 rng(14);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    MatSeq s = random_seq(rng, Q, 2, 4);
    auto basis = centralizer_basis(s);
    if (commutator(s[0], s[1]).is_zero()) {
      EXPECT_GE(basis.size(), 2u);
      continue;
    }
    ++checked;
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(basis[0][1].is_zero());
    EXPECT_TRUE(basis[0][2].is_zero());
    EXPECT_EQ(basis[0][0], basis[0][3]);
  }
  EXPECT_GT(checked, 200);
}

TEST(Stability, Examples) {
  EXPECT_TRUE(is_stable(seq({qm(1, 0, 0, 0), qm(0, 1, 1, 0)})));
  EXPECT_FALSE(is_stable(seq({qm(1, 2, 0, 3), qm(4, 5, 0, 6)})));
  EXPECT_TRUE(is_stable(seq({qm(1, 0, 0, 0), qm(1, 1, 0, 0), qm(0, 0, 1, 1)})));
  // a single rotation is not stable: it triangularizes over Q(i)
  EXPECT_FALSE(is_stable(seq({qm(0, -1, 1, 0)})));
  EXPECT_THROW(is_stable(seq({Mat2::from_ints(Z, 1, 0, 0, 0)})), Error);

  EXPECT_TRUE(is_semisimple(seq({qm(2, 0, 0, 2), qm(3, 0, 0, 3)})));
  EXPECT_TRUE(is_semisimple(seq({qm(1, 0, 0, 2), qm(3, 0, 0, 4)})));
  EXPECT_FALSE(is_semisimple(seq({qm(0, 1, 0, 0)})));
  EXPECT_TRUE(is_semisimple(seq({qm(0, -1, 1, 0)})));
  EXPECT_FALSE(is_semisimple(seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0)})));
}

TEST(Stability, MatchesNonTriangularizabilityWhenEigenvaluesAreRational) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 500; ++i) {
    MatSeq s = random_seq(rng, Ring::prime_field(5), static_cast<std::size_t>(uniform(rng, 2, 4)), 0);
    bool rational_eigen = true;
    for (const auto& m : s) rational_eigen = rational_eigen && (m.is_scalar() || try_sqrt(m.disc()).has_value());
    if (!rational_eigen) continue;
    EXPECT_EQ(is_stable(s), !brute_triangularizable(s).has_value());
    EXPECT_EQ(is_stable(s), is_stable(conjugate(random_group_element(rng, s.ring()), s)));
  }
}

TEST(PhiPrime, Examples) {
  PhiVector v = phi_prime(seq({qm(2, 0, 0, 0), qm(1, 1, 3, 0)}));
  EXPECT_EQ(v.n, 2u);
  EXPECT_EQ(v.values, qs({2, 4, 1, 7, 2}));
  EXPECT_TRUE(v.in_injectivity_domain);
  EXPECT_THROW(phi_prime(seq({qm(1, 0, 0, 0)})), Error);
  EXPECT_THROW(phi_prime(MatSeq({Mat2::from_ints(Ring::prime_field(2), 1, 0, 0, 0), Mat2::identity(Ring::prime_field(2))})),
               Error);
}

TEST(PhiPrime, ConjugationInvariantAndSeparating) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    MatSeq s = random_seq(rng, Q, static_cast<std::size_t>(uniform(rng, 2, 5)), 3);
    EXPECT_EQ(phi_prime(s).values, phi_prime(conjugate(random_group_element(rng, Q), s)).values);
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    MatSeq s1 = testsupport::random_form_1a(rng, n, 2), s2 = testsupport::random_form_1a(rng, n, 2);
    EXPECT_EQ(phi_prime(s1).values == phi_prime(s2).values, are_similar(s1, s2).has_value());
  }
}

TEST(PhiPrime, CommutativeFailurePair) {
  // outside the injectivity domain: equal invariants, different orbits
  const MatSeq jordan = seq({qm(2, 1, 0, 2), qm(3, 0, 0, 3)}), scalar = seq({qm(2, 0, 0, 2), qm(3, 0, 0, 3)});
  EXPECT_EQ(phi_prime(jordan).values, phi_prime(scalar).values);
  EXPECT_FALSE(are_similar(jordan, scalar));
  EXPECT_FALSE(phi_prime(jordan).in_injectivity_domain);
}

TEST(PsiPrime, Examples) {
  const MatSeq s = seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0), qm(0, 2, 0, 1)});
  PsiValue w = psi_prime(s);
  EXPECT_EQ(w.proj, qs({1, 2}));
  EXPECT_FALSE(w.full_plucker);
  EXPECT_EQ(w.traces, qs({1, 1, 0, 0, 1, 0}));
  EXPECT_TRUE(w.in_two_to_one_domain);

  EXPECT_THROW(psi_prime(seq({qm(1, 0, 0, 0), qm(0, 1, 1, 0)})), Error);
  EXPECT_THROW(psi_prime(seq({qm(1, 0, 0, 0), qm(2, 0, 0, 0)})), Error);
  EXPECT_THROW(psi_prime(MatSeq({Mat2::identity(Ring::uni_poly()), Mat2::identity(Ring::uni_poly())})), Error);

  // [A1, A2] = 0: the first coordinate vanishes
  PsiValue late = psi_prime(seq({qm(1, 0, 0, 0), qm(2, 0, 0, 0), qm(0, 1, 0, 0)}));
  EXPECT_FALSE(late.full_plucker);
  EXPECT_EQ(late.proj, qs({0, 1}));

  // A1 commutes with everything: fall back to every delta_jk
  PsiValue full = psi_prime(seq({qm(1, 0, 0, 1), qm(1, 0, 0, 0), qm(0, 1, 0, 0)}));
  EXPECT_TRUE(full.full_plucker);
  EXPECT_EQ(full.proj, qs({0, 0, 1}));
}

TEST(PsiPrime, TwoToOneOnRandomSequences) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    MatSeq s = testsupport::random_triangularizable_pair_domain(rng, n, 3);
    PsiValue w = psi_prime(s);
    EXPECT_EQ(w, psi_prime(conjugate(random_group_element(rng, Q), s)));

    auto t = triangularize(s);
    ASSERT_TRUE(t);
    std::vector<Mat2> flipped;
    for (const auto& m : t->triangular) flipped.emplace_back(m.d(), m.b(), m.c(), m.a());
    MatSeq partner(flipped);
    EXPECT_EQ(w, psi_prime(partner));
    EXPECT_FALSE(are_similar(s, partner));
  }
}

TEST(Plucker, Coordinates) {
  const MatSeq t = seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0), qm(0, 2, 0, 1)});
  EXPECT_EQ(plucker_coordinates(t), qs({-1, -2, -1}));
}
