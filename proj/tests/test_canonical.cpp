#include <gtest/gtest.h>

#include "matseq/canonical.hpp"
#include "matseq/invariants.hpp"
#include "matseq/similarity.hpp"
#include "matseq/triangular.hpp"
#include "support/generators.hpp"

using namespace matseq;
using testsupport::random_group_element;
using testsupport::random_seq;
using testsupport::uniform;

namespace {
const Ring Q = Ring::rationals();
Mat2 qm(long a, long b, long c, long d) { return Mat2::from_ints(Q, a, b, c, d); }
MatSeq seq(std::vector<Mat2> t) { return MatSeq(std::move(t)); }
std::vector<Scalar> qs(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar::rational(x));
  return out;
}

MatSeq permute(const MatSeq& s, const std::vector<std::size_t>& perm) {
  std::vector<Mat2> t;
  for (auto i : perm) t.push_back(s[i]);
  return MatSeq(t);
}

// Structural equations of each canonical case.
::testing::AssertionResult has_canonical_shape(const CanonicalResult& c) {
  const MatSeq& f = c.form;
  auto fail_with = [&](const char* why) {
    return ::testing::AssertionFailure() << to_string(c.tag) << ": " << why;
  };
  auto jordan = [](const Mat2& m) { return m.c().is_zero() && m.b().is_one() && m.a() == m.d(); };
  switch (c.tag) {
    case CanonicalTag::Stable1a:
      if (!f[0].is_diagonal() || f[0].is_scalar()) return fail_with("A1 not diagonal non-scalar");
      if (!f[1].b().is_one()) return fail_with("b2 != 1");
      if (sigma(f[0], f[1]).is_zero()) return fail_with("sigma12 = 0");
      break;
    case CanonicalTag::Stable1b:
      if (!jordan(f[0])) return fail_with("A1 not a Jordan block");
      if (!f[1].b().is_one()) return fail_with("b2 != 1");
      if (sigma(f[0], f[1]).is_zero()) return fail_with("sigma12 = 0");
      break;
    case CanonicalTag::Stable1c:
      if (!f[0].is_diagonal() || f[0].is_scalar()) return fail_with("A1 not diagonal non-scalar");
      if (!f[1].b().is_one() || !f[1].c().is_zero()) return fail_with("A2 not upper with b2 = 1");
      if (!f[2].b().is_zero() || f[2].c().is_zero()) return fail_with("A3 not strictly lower");
      break;
    case CanonicalTag::Tri2a:
    case CanonicalTag::Tri2b:
      if (!f.is_upper_triangular()) return fail_with("not upper triangular");
      if (!f[0].is_diagonal() || f[0].is_scalar()) return fail_with("A1 not diagonal non-scalar");
      if (!f[1].b().is_one()) return fail_with("b2 != 1");
      if (c.tag == CanonicalTag::Tri2b && !jordan(f[1])) return fail_with("A2 not a Jordan block");
      break;
    case CanonicalTag::CommDiagonal:
      for (const auto& m : f)
        if (!m.is_diagonal()) return fail_with("term not diagonal");
      break;
    case CanonicalTag::CommJordanLike:
      for (const auto& m : f)
        if (!m.c().is_zero() || !(m.a() == m.d())) return fail_with("term not of the form aI + bN");
      break;
    case CanonicalTag::AllScalar: break;
  }
  return ::testing::AssertionSuccess();
}

void expect_consistent(const MatSeq& s, const CanonicalResult& c) {
  EXPECT_TRUE(has_canonical_shape(c));
  const Ring& k = c.form.ring();
  EXPECT_EQ(conjugate(c.g, permute(s, c.permutation).promote(k)), c.form);
}
}  // namespace

TEST(Tags, NamesRoundTrip) {
  for (auto t : {CanonicalTag::Stable1a, CanonicalTag::Stable1b, CanonicalTag::Stable1c, CanonicalTag::Tri2a,
                 CanonicalTag::Tri2b, CanonicalTag::CommDiagonal, CanonicalTag::CommJordanLike, CanonicalTag::AllScalar})
    EXPECT_EQ(parse_canonical_tag(to_string(t)), t);
  EXPECT_FALSE(parse_canonical_tag("Stable1d"));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(seq({qm(0, 1, 0, 0), qm(0, 0, 1, 0)})), CanonicalTag::Stable1b);
  EXPECT_EQ(classify(seq({qm(1, 0, 0, 0), qm(1, 1, 0, 0), qm(0, 0, 1, 1)})), CanonicalTag::Stable1c);
  EXPECT_EQ(classify(seq({qm(1, 0, 0, 0), qm(1, 1, 0, 0)})), CanonicalTag::Tri2a);
  EXPECT_EQ(classify(seq({qm(1, 0, 0, 0), qm(1, 1, 0, 1)})), CanonicalTag::Tri2b);
  EXPECT_EQ(classify(seq({qm(1, 0, 0, 0), qm(0, 2, 3, 0)})), CanonicalTag::Stable1a);
  EXPECT_EQ(classify(seq({qm(1, 0, 0, 2), qm(3, 0, 0, 4)})), CanonicalTag::CommDiagonal);
  EXPECT_EQ(classify(seq({qm(1, 1, 0, 1), qm(2, 3, 0, 2)})), CanonicalTag::CommJordanLike);
  EXPECT_EQ(classify(seq({qm(2, 0, 0, 2)})), CanonicalTag::AllScalar);
  EXPECT_THROW(classify(MatSeq({Mat2::from_ints(Ring::integers(), 1, 0, 0, 0)})), Error);
}

TEST(Classify, Rearrangements) {
  // the diagonalizable member of the first sigma pair goes first
  auto c1 = classify_with_permutation(seq({qm(0, 1, 0, 0), qm(0, 1, 1, 0), qm(1, 0, 0, 2)}));
  EXPECT_EQ(c1.tag, CanonicalTag::Stable1a);
  EXPECT_EQ(c1.permutation, (std::vector<std::size_t>{1, 0, 2}));

  // sigma(E12, E21) != 0 comes first, but neither member is diagonalizable
  auto c0 = classify_with_permutation(seq({qm(0, 1, 0, 0), qm(1, 0, 0, 0), qm(0, 0, 1, 0)}));
  EXPECT_EQ(c0.tag, CanonicalTag::Stable1b);
  EXPECT_EQ(c0.permutation, (std::vector<std::size_t>{0, 2, 1}));

  // a scalar term in front is skipped and placed after the selected pair
  auto c2 = classify_with_permutation(seq({qm(3, 0, 0, 3), qm(1, 0, 0, 0), qm(1, 1, 0, 0)}));
  EXPECT_EQ(c2.tag, CanonicalTag::Tri2a);
  EXPECT_EQ(c2.permutation, (std::vector<std::size_t>{1, 2, 0}));

  // 2b: the Jordan-type term is second
  auto c3 = classify_with_permutation(seq({qm(1, 1, 0, 1), qm(1, 0, 0, 0)}));
  EXPECT_EQ(c3.tag, CanonicalTag::Tri2b);
  EXPECT_EQ(c3.permutation, (std::vector<std::size_t>{1, 0}));

  // 1c: the term preserving the first eigenline of A1 is second
  auto c4 = classify_with_permutation(seq({qm(1, 0, 0, 0), qm(0, 0, 1, 1), qm(1, 1, 0, 0)}));
  EXPECT_EQ(c4.tag, CanonicalTag::Stable1c);
  EXPECT_EQ(c4.permutation, (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Classify, ConjugationInvariant) {
  std::mt19937_64 rng(21);
  for (const Ring& r : {Q, Ring::prime_field(5), Ring::prime_field(2)}) {
    for (int i = 0; i < 300; ++i) {
      MatSeq s = random_seq(rng, r, static_cast<std::size_t>(uniform(rng, 1, 5)), 2);
      auto c = classify_with_permutation(s);
      auto d = classify_with_permutation(conjugate(random_group_element(rng, r), s));
      EXPECT_EQ(c.tag, d.tag);
      EXPECT_EQ(c.permutation, d.permutation);
    }
  }
}

TEST(Canonicalize, Examples) {
  const MatSeq s = seq({qm(1, 0, 0, 0), qm(0, 2, 3, 0)});
  CanonicalResult c = canonicalize(s);
  EXPECT_EQ(c.tag, CanonicalTag::Stable1a);
  EXPECT_EQ(c.form, seq({qm(1, 0, 0, 0), qm(0, 1, 6, 0)}));
  EXPECT_FALSE(c.extension);
  expect_consistent(s, c);

  // already canonical: identity conjugator and permutation
  const MatSeq canon = seq({qm(1, 0, 0, 0), qm(0, 1, 6, 0), qm(2, 3, 4, 5)});
  CanonicalResult id = canonicalize(canon);
  EXPECT_EQ(id.form, canon);
  EXPECT_EQ(id.g.matrix(), Mat2::identity(Q));
  EXPECT_EQ(id.permutation, (std::vector<std::size_t>{0, 1, 2}));

  // irrational eigenvalues adjoin sqrt(2)
  const MatSeq irr = seq({qm(0, 2, 1, 0), qm(1, 0, 0, 0)});
  CanonicalResult e = canonicalize(irr);
  ASSERT_TRUE(e.extension);
  EXPECT_EQ(*e.extension, Ring::quad_ext(2));
  expect_consistent(irr, e);

  // 1b needs sqrt(-4 c2)
  const MatSeq jb = seq({qm(0, 1, 0, 0), qm(0, 0, 1, 0)});
  CanonicalResult b = canonicalize(jb);
  EXPECT_EQ(b.tag, CanonicalTag::Stable1b);
  ASSERT_TRUE(b.extension);
  EXPECT_EQ(*b.extension, Ring::quad_ext(-1));
  expect_consistent(jb, b);

  for (const MatSeq& t : {seq({qm(1, 0, 0, 0), qm(1, 1, 0, 0), qm(0, 0, 1, 1)}), seq({qm(2, 1, 0, 3), qm(1, 0, 0, 1)}),
                          seq({qm(1, 1, 0, 1), qm(1, 0, 0, 0), qm(0, 5, 0, 0)}), seq({qm(1, 2, 3, 4), qm(7, 4, 6, 13)}),
                          seq({qm(1, 1, 0, 1), qm(2, 3, 0, 2)}), seq({qm(5, 0, 0, 5)})})
    expect_consistent(t, canonicalize(t));

  EXPECT_THROW(canonicalize(MatSeq({Mat2::from_ints(Ring::prime_field(2), 1, 0, 0, 0)})), Error);
  // GF(3): x^2 + 1 has no root, GF(9) is out of scope
  EXPECT_THROW(canonicalize(MatSeq({Mat2::from_ints(Ring::prime_field(3), 0, 1, 0, 0),
                                    Mat2::from_ints(Ring::prime_field(3), 0, 0, 1, 0)})),
               Error);
}

TEST(Canonicalize, TowerTooDeep) {
  // over Q(sqrt 2), eigenvalues of [[0, 3], [1, 0]] need sqrt 3
  const Ring k = Ring::quad_ext(2);
  const MatSeq s({Mat2::from_ints(k, 0, 3, 1, 0), Mat2::from_ints(k, 1, 0, 0, 0)});
  try {
    canonicalize(s);
    FAIL() << "expected TowerTooDeep";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TowerTooDeep);
  }
}

TEST(Canonicalize, UniqueOnOrbits) {
  std::mt19937_64 rng(22);
  int non_commutative = 0;
  for (int i = 0; i < 300; ++i) {
    MatSeq s = random_seq(rng, Q, static_cast<std::size_t>(uniform(rng, 1, 5)), 3);
    CanonicalResult c = canonicalize(s);
    expect_consistent(s, c);
    CanonicalResult d = canonicalize(conjugate(random_group_element(rng, Q), s));
    EXPECT_EQ(c.tag, d.tag);
    EXPECT_EQ(c.form, d.form);
    if (!is_commutative(s)) ++non_commutative;
  }
  EXPECT_GT(non_commutative, 100);
}

TEST(Canonicalize, UniqueOnStructuredOrbits) {
  std::mt19937_64 rng(23);
  const Ring gf7 = Ring::prime_field(7);
  for (int i = 0; i < 300; ++i) {
    // triangular and commutative families are rare among random inputs
    MatSeq u = testsupport::random_upper_seq(rng, Q, static_cast<std::size_t>(uniform(rng, 2, 4)), 2);
    if (uniform(rng, 0, 1)) {
      auto t = u.terms();
      t[0] = qm(1, 1, 0, 1);
      u = MatSeq(t);
    }
    CanonicalResult c = canonicalize(u);
    expect_consistent(u, c);
    EXPECT_EQ(c.form, canonicalize(conjugate(random_group_element(rng, Q), u)).form);

    MatSeq g = random_seq(rng, gf7, 3, 0);
    try {
      CanonicalResult cg = canonicalize(g);
      expect_consistent(g, cg);
      EXPECT_EQ(cg.form, canonicalize(conjugate(random_group_element(rng, gf7), g)).form);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedRing);
    }
  }
}

TEST(Canonicalize, LaterTermsSeparate) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    MatSeq s = testsupport::random_form_1a(rng, 3, 3);
    CanonicalResult c = canonicalize(s);
    auto t = c.form.terms();
    t[2] = t[2] + Mat2(Scalar::zero(c.form.ring()), Scalar::one(c.form.ring()), Scalar::zero(c.form.ring()),
                       Scalar::zero(c.form.ring()));
    MatSeq perturbed(t);
    EXPECT_FALSE(are_similar(c.form, perturbed));
    EXPECT_FALSE(canonicalize(perturbed).form == c.form);
  }
}

TEST(CommutativeSimilar, Examples) {
  EXPECT_TRUE(commutative_similar(seq({qm(1, 0, 0, 2), qm(3, 0, 0, 4)}), seq({qm(2, 0, 0, 1), qm(4, 0, 0, 3)})));
  EXPECT_FALSE(commutative_similar(seq({qm(1, 0, 0, 2), qm(3, 0, 0, 4)}), seq({qm(2, 0, 0, 1), qm(3, 0, 0, 4)})));
  EXPECT_TRUE(commutative_similar(seq({qm(1, 1, 0, 1), qm(2, 3, 0, 2)}), seq({qm(1, 2, 0, 1), qm(2, 6, 0, 2)})));
  EXPECT_FALSE(commutative_similar(seq({qm(1, 1, 0, 1), qm(2, 3, 0, 2)}), seq({qm(1, 1, 0, 1), qm(3, 3, 0, 3)})));
  EXPECT_FALSE(commutative_similar(seq({qm(1, 1, 0, 1), qm(2, 3, 0, 2)}), seq({qm(1, 1, 0, 1), qm(2, 5, 0, 2)})));
  EXPECT_THROW(commutative_similar(seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0)}), seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0)})),
               Error);

  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    // commutative sequences: polynomials in one matrix
    const Mat2 base = testsupport::random_mat(rng, Q, 3);
    std::vector<Mat2> t;
    for (int k = 0; k < 3; ++k)
      t.push_back(Mat2::scalar(Scalar::rational(uniform(rng, -3, 3))) + Scalar::rational(uniform(rng, -3, 3)) * base);
    MatSeq s(t);
    MatSeq other = uniform(rng, 0, 1) ? conjugate(random_group_element(rng, Q), s)
                                      : conjugate(random_group_element(rng, Q), MatSeq({t[0], t[1], t[2] + t[0]}));
    EXPECT_EQ(commutative_similar(s, other), are_similar(s, other).has_value());
  }
}

TEST(Dual, Examples) {
  const MatSeq s = seq({qm(2, 0, 0, 0), qm(1, 1, -1, 0)});
  EXPECT_EQ(dual_sequence(s), seq({qm(0, 0, 0, 2), qm(0, 1, -1, 1)}));
  EXPECT_THROW(dual_sequence(seq({qm(1, 2, 0, 0), qm(1, 1, -1, 0)})), Error);
  EXPECT_THROW(dual_sequence(seq({qm(2, 0, 0, 0), qm(1, 2, -1, 0)})), Error);

  std::mt19937_64 rng(26);
  for (int i = 0; i < 100; ++i) {
    MatSeq f = testsupport::random_form_1a(rng, static_cast<std::size_t>(uniform(rng, 2, 4)), 3);
    MatSeq d = dual_sequence(f);
    EXPECT_TRUE(d[0].is_diagonal());
    EXPECT_EQ(d[0].a(), f[0].d());
    EXPECT_TRUE(d[1].b().is_one());
    EXPECT_EQ(phi_prime(d).values, phi_prime(f).values);
    MatSeq dd = dual_sequence(d);
    EXPECT_TRUE(are_similar(dd, f.promote(dd.ring())));
  }
}

TEST(ReconstructSemisimple, Examples) {
  PhiVector v{Q, 2, qs({2, 4, 1, 7, 2}), true};
  EXPECT_EQ(reconstruct_semisimple(v), seq({qm(2, 0, 0, 0), qm(1, 1, 3, 0)}));

  auto code_of = [](const PhiVector& w) {
    try {
      reconstruct_semisimple(w);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code_of(PhiVector{Q, 2, qs({2, 2, 1, 7, 2}), false}), ErrorCode::DegenerateDiscriminant);
  EXPECT_EQ(code_of(PhiVector{Q, 2, qs({2, 4, 1, 1, 2}), false}), ErrorCode::ZeroC2);
  EXPECT_EQ(code_of(PhiVector{Q, 2, qs({2, 4, 1, 7}), false}), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of(PhiVector{Ring::prime_field(2), 2, {}, false}), ErrorCode::Char2Unsupported);
}

TEST(ReconstructSemisimple, InvertsTheInvariantMap) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 200; ++i) {
    MatSeq f = testsupport::random_form_1a(rng, static_cast<std::size_t>(uniform(rng, 2, 6)), 4);
    EXPECT_EQ(reconstruct_semisimple(phi_prime(f)), f);
  }
  // arbitrary admissible vectors, possibly with irrational roots
  int irrational = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    PhiVector v{Q, n, {}, false};
    for (std::size_t k = 0; k < 4 * n - 3; ++k) v.values.push_back(Scalar::rational(testsupport::small_rational(rng, 5)));
    MatSeq s = seq({qm(1, 0, 0, 0), qm(1, 0, 0, 0)});
    try {
      s = reconstruct_semisimple(v);
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::DegenerateDiscriminant || e.code() == ErrorCode::ZeroC2);
      continue;
    }
    if (s.ring().kind() == RingKind::QuadExt) ++irrational;
    EXPECT_EQ(phi_prime(s).values, v.values);
  }
  EXPECT_GT(irrational, 50);
}

TEST(ReconstructTriangular, Examples) {
  const MatSeq s = seq({qm(1, 0, 0, 0), qm(0, 1, 0, 0), qm(0, 2, 0, 1)});
  auto [first, flipped] = reconstruct_triangular(psi_prime(s));
  EXPECT_EQ(first, s);
  EXPECT_EQ(flipped, seq({qm(0, 0, 0, 1), qm(0, 1, 0, 0), qm(1, 2, 0, 0)}));
  EXPECT_FALSE(are_similar(first, flipped));
  EXPECT_EQ(psi_prime(flipped), psi_prime(s));

  PsiValue full = psi_prime(seq({qm(1, 0, 0, 1), qm(1, 0, 0, 0), qm(0, 1, 0, 0)}));
  EXPECT_THROW(reconstruct_triangular(full), Error);
}

TEST(ReconstructTriangular, RoundTrip) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 150; ++i) {
    MatSeq s = testsupport::random_triangularizable_pair_domain(rng, static_cast<std::size_t>(uniform(rng, 2, 5)), 3);
    PsiValue w = psi_prime(s);
    auto [a, b] = reconstruct_triangular(w);
    EXPECT_EQ(psi_prime(a), w);
    EXPECT_EQ(psi_prime(b), w);
    EXPECT_NE(are_similar(s, a).has_value(), are_similar(s, b).has_value());
    EXPECT_FALSE(are_similar(a, b));
  }
}

TEST(Desingularize, Examples) {
  const MatSeq pair = seq({qm(0, 1, 0, 0), qm(0, 0, 1, 0)});
  auto [t, how] = desingularize_for_reconstruction(pair);
  EXPECT_EQ(how.kind, DesingularizationKind::Pair1b);
  EXPECT_EQ(t, seq({qm(0, 1, -1, 0), qm(0, 1, 1, 0)}));
  EXPECT_FALSE(t[0].disc().is_zero());
  EXPECT_EQ(undo_desingularization(t, how), pair);

  const MatSeq triple = seq({qm(1, 0, 0, 0), qm(0, 0, 1, 1), qm(1, 1, 0, 0), qm(2, 0, 0, 2)});
  auto [u, how3] = desingularize_for_reconstruction(triple);
  EXPECT_EQ(how3.kind, DesingularizationKind::Triple1c);
  EXPECT_FALSE(commutator(u[0], u[1]).is_zero());
  EXPECT_EQ(undo_desingularization(u, how3), triple);

  EXPECT_THROW(desingularize_for_reconstruction(seq({qm(1, 0, 0, 0), qm(0, 1, 1, 0)})), Error);
}

TEST(Desingularize, LandsInInjectivityDomain) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    // random 1b: two Jordan-type terms with different eigenlines, plus extras
    Mat2 j1 = conjugate(random_group_element(rng, Q), qm(1, 1, 0, 1));
    Mat2 j2 = conjugate(random_group_element(rng, Q), qm(2, 1, 0, 2));
    if (sigma(j1, j2).is_zero()) continue;
    // a third term commuting with j1 keeps every sigma pair non-diagonalizable
    MatSeq s = seq({j1, j2, Mat2::scalar(Scalar::rational(2)) + Scalar::rational(3) * j1});
    auto [t, how] = desingularize_for_reconstruction(s);
    EXPECT_FALSE(t[0].disc().is_zero());
    EXPECT_FALSE(commutator(t[0], t[1]).is_zero());
    EXPECT_TRUE(phi_prime(t).in_injectivity_domain);
    EXPECT_EQ(undo_desingularization(t, how), s);
  }
}
