#include "matseq/canonical.hpp"

#include <numeric>

#include "matseq/invariants.hpp"
#include "matseq/linalg.hpp"
#include "matseq/triangular.hpp"

namespace matseq {

std::string_view to_string(CanonicalTag tag) noexcept {
  switch (tag) {
    case CanonicalTag::Stable1a: return "Stable1a";
    case CanonicalTag::Stable1b: return "Stable1b";
    case CanonicalTag::Stable1c: return "Stable1c";
    case CanonicalTag::Tri2a: return "Tri2a";
    case CanonicalTag::Tri2b: return "Tri2b";
    case CanonicalTag::CommDiagonal: return "CommDiagonal";
    case CanonicalTag::CommJordanLike: return "CommJordanLike";
    case CanonicalTag::AllScalar: return "AllScalar";
  }
  return "?";
}

std::optional<CanonicalTag> parse_canonical_tag(std::string_view name) noexcept {
  for (auto t : {CanonicalTag::Stable1a, CanonicalTag::Stable1b, CanonicalTag::Stable1c, CanonicalTag::Tri2a,
                 CanonicalTag::Tri2b, CanonicalTag::CommDiagonal, CanonicalTag::CommJordanLike,
                 CanonicalTag::AllScalar})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

namespace {

void require_field(const Ring& r) {
  if (!r.is_field()) fail(ErrorCode::UnsupportedRing, "canonical forms need a field, got " + r.name());
}

void require_odd_char(const Ring& r) {
  if (r.characteristic() == 2) fail(ErrorCode::Char2Unsupported, "canonical forms need char != 2");
}

// The working field: the input field, possibly with one square root adjoined.
struct Tower {
  Ring ring;
  std::optional<Ring> extension;

  Scalar sqrt(const Scalar& x0) {
    const Scalar x = x0.promote(ring);
    if (auto r = try_sqrt(x)) return *r;
    if (ring.kind() == RingKind::Rationals) {
      ring = Ring::quad_ext(x.as_rational());
      extension = ring;
      return *try_sqrt(x.promote(ring));
    }
    if (ring.kind() == RingKind::PrimeField)
      fail(ErrorCode::UnsupportedRing, "square root of " + x.to_string() + " lies in GF(p^2), which is not supported");
    fail(ErrorCode::TowerTooDeep, "square root of " + x.to_string() + " needs a second quadratic extension");
  }
};

bool diagonalizable(const Mat2& m) { return m.is_scalar() || !m.disc().is_zero(); }

const Mat2* first_non_scalar(const MatSeq& s) {
  for (const auto& m : s)
    if (!m.is_scalar()) return &m;
  return nullptr;
}

std::vector<std::size_t> selected_first(std::vector<std::size_t> head, std::size_t n) {
  std::vector<bool> used(n, false);
  for (auto i : head) used[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) head.push_back(i);
  return head;
}

MatSeq permuted(const MatSeq& s, const std::vector<std::size_t>& perm) {
  std::vector<Mat2> t;
  for (auto i : perm) t.push_back(s[i]);
  return MatSeq(std::move(t));
}

Mat2 columns(const std::array<Scalar, 2>& v1, const std::array<Scalar, 2>& v2) { return Mat2(v1[0], v2[0], v1[1], v2[1]); }

// g with g A g^-1 = diag(l1, l2), l1 = (tr + r)/2 for the canonical root r.
GroupElement diagonalize(const Mat2& a0, Tower& tw) {
  const Scalar r = tw.sqrt(a0.disc());
  const Mat2 a = a0.promote(tw.ring);
  const Scalar two = Scalar::from_integer(tw.ring, 2);
  const Scalar l1 = (a.trace() + r).exact_div(two), l2 = (a.trace() - r).exact_div(two);
  return GroupElement(columns(eigenvector(a, l1), eigenvector(a, l2))).inverse();
}

// g with g A g^-1 = [[l, 1], [0, l]] for a non-diagonalizable non-scalar A.
GroupElement jordanize(const Mat2& a) {
  const Scalar lambda = a.trace().exact_div(Scalar::from_integer(a.ring(), 2));
  const Mat2 n = a - Mat2::scalar(lambda);
  const Scalar one = Scalar::one(a.ring()), zero = Scalar::zero(a.ring());
  std::array<Scalar, 2> w{one, zero};
  if (n.a().is_zero() && n.c().is_zero()) w = {zero, one};
  const std::array<Scalar, 2> v{n.a() * w[0] + n.b() * w[1], n.c() * w[0] + n.d() * w[1]};
  return GroupElement(columns(v, w)).inverse();
}

GroupElement scale_b2(const MatSeq& q) {
  const Ring& r = q.ring();
  return GroupElement(Mat2::diag(Scalar::one(r), q[1].b()));
}

bool is_eigenvector(const Mat2& m, const std::array<Scalar, 2>& v) {
  const Scalar x = m.a() * v[0] + m.b() * v[1], y = m.c() * v[0] + m.d() * v[1];
  return (v[0] * y - v[1] * x).is_zero();
}

// Basis (common eigenvector, other eigenvector of A_1) for a triangularizable
// non-commutative sequence whose first term is diagonalizable.
GroupElement triangular_basis(const MatSeq& p) {
  auto ev = eigenvalues_in_ring(p[0]);
  if (!ev) fail(ErrorCode::InternalInconsistency, "triangularizable sequence without rational eigenvalues");
  const auto v1 = eigenvector(p[0], (*ev)[0]), v2 = eigenvector(p[0], (*ev)[1]);
  bool first_common = true, second_common = true;
  for (const auto& m : p) {
    first_common = first_common && is_eigenvector(m, v1);
    second_common = second_common && is_eigenvector(m, v2);
  }
  if (first_common) return GroupElement(columns(v1, v2)).inverse();
  if (second_common) return GroupElement(columns(v2, v1)).inverse();
  fail(ErrorCode::InternalInconsistency, "no common eigenvector among the eigenvectors of the first term");
}

// With A diagonalized in canonical eigenvalue order, B is upper triangular iff
// it preserves the first eigenline: (A - l1)(B)(A - l2) = 0.
bool preserves_first_eigenline(const Mat2& a, const Mat2& b) {
  auto ev = eigenvalues_in_ring(a);
  if (!ev) return false;
  const Mat2 p = a - Mat2::scalar((*ev)[0]), q = a - Mat2::scalar((*ev)[1]);
  return (p * b * q).is_zero();
}

}  // namespace

Classification classify_with_permutation(const MatSeq& s) {
  require_field(s.ring());
  const std::size_t n = s.size();
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  const Mat2* anchor = first_non_scalar(s);
  if (!anchor) return {CanonicalTag::AllScalar, identity};
  if (is_commutative(s))
    return {anchor->disc().is_zero() ? CanonicalTag::CommJordanLike : CanonicalTag::CommDiagonal, identity};

  std::optional<std::pair<std::size_t, std::size_t>> any_pair, diag_pair;
  for (std::size_t j = 0; j < n && !diag_pair; ++j)
    for (std::size_t k = j + 1; k < n && !diag_pair; ++k) {
      if (sigma(s[j], s[k]).is_zero()) continue;
      if (!any_pair) any_pair = {j, k};
      if (diagonalizable(s[j]) || diagonalizable(s[k])) diag_pair = {j, k};
    }
  if (diag_pair) {
    auto [j, k] = *diag_pair;
    if (!diagonalizable(s[j])) std::swap(j, k);
    return {CanonicalTag::Stable1a, selected_first({j, k}, n)};
  }
  if (any_pair) return {CanonicalTag::Stable1b, selected_first({any_pair->first, any_pair->second}, n)};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (delta_explicit(s[i], s[j], s[k]).is_zero()) continue;
        std::array<std::size_t, 3> t{i, j, k};
        std::size_t lead = 0;
        while (lead < 3 && !diagonalizable(s[t[lead]])) ++lead;
        if (lead == 3) fail(ErrorCode::InternalInconsistency, "stable triple without a diagonalizable term");
        std::swap(t[0], t[lead]);
        if (t[1] > t[2]) std::swap(t[1], t[2]);
        if (s.ring().characteristic() != 2 && !preserves_first_eigenline(s[t[0]], s[t[1]])) std::swap(t[1], t[2]);
        return {CanonicalTag::Stable1c, selected_first({t[0], t[1], t[2]}, n)};
      }

  // triangularizable and non-commutative
  std::optional<std::size_t> jordan;
  for (std::size_t j = 0; j < n && !jordan; ++j)
    if (!diagonalizable(s[j])) jordan = j;
  if (!jordan) {
    const std::size_t f = static_cast<std::size_t>(anchor - &s[0]);
    for (std::size_t k = f + 1; k < n; ++k)
      if (!commutator(s[f], s[k]).is_zero()) return {CanonicalTag::Tri2a, selected_first({f, k}, n)};
  } else {
    for (std::size_t j = 0; j < n; ++j)
      if (!s[j].is_scalar() && diagonalizable(s[j]) && !commutator(s[j], s[*jordan]).is_zero())
        return {CanonicalTag::Tri2b, selected_first({j, *jordan}, n)};
  }
  fail(ErrorCode::InternalInconsistency, "sequence fits no canonical case");
}

CanonicalTag classify(const MatSeq& s) { return classify_with_permutation(s).tag; }

CanonicalResult canonicalize(const MatSeq& s) {
  require_field(s.ring());
  require_odd_char(s.ring());
  Classification cls = classify_with_permutation(s);
  const MatSeq p = permuted(s, cls.permutation);
  Tower tw{s.ring(), std::nullopt};

  auto finish = [&](const GroupElement& g) {
    const MatSeq lifted = p.promote(tw.ring);
    const GroupElement gg(g.matrix().promote(tw.ring));
    return CanonicalResult{cls.tag, cls.permutation, conjugate(gg, lifted), gg, tw.extension};
  };

  switch (cls.tag) {
    case CanonicalTag::AllScalar: return finish(GroupElement::identity(s.ring()));
    case CanonicalTag::CommDiagonal: return finish(diagonalize(*first_non_scalar(p), tw));
    case CanonicalTag::CommJordanLike: return finish(jordanize(*first_non_scalar(p)));
    case CanonicalTag::Stable1a:
    case CanonicalTag::Stable1c: {
      const GroupElement g0 = diagonalize(p[0], tw);
      const MatSeq q = conjugate(g0, p.promote(tw.ring));
      return finish(scale_b2(q) * g0);
    }
    case CanonicalTag::Stable1b: {
      const GroupElement g0 = jordanize(p[0]);
      const MatSeq q0 = conjugate(g0, p);
      const Scalar r = tw.sqrt(-4 * q0[1].c());
      const MatSeq q = q0.promote(tw.ring);
      // [[1, z], [0, 1]] sends b to b - z e - z^2 c; pick the root with b = 1
      const Scalar z = (r - q[1].e()).exact_div(2 * q[1].c());
      const GroupElement u(Mat2(Scalar::one(tw.ring), z, Scalar::zero(tw.ring), Scalar::one(tw.ring)));
      return finish(u * GroupElement(g0.matrix().promote(tw.ring)));
    }
    case CanonicalTag::Tri2a:
    case CanonicalTag::Tri2b: {
      const GroupElement g0 = triangular_basis(p);
      const MatSeq q = conjugate(g0, p);
      return finish(scale_b2(q) * g0);
    }
  }
  fail(ErrorCode::InternalInconsistency, "unknown tag");
}

bool commutative_similar(const MatSeq& s1, const MatSeq& s2) {
  if (!is_commutative(s1) || !is_commutative(s2)) fail(ErrorCode::NotCommutative, "both sequences must be commutative");
  if (s1.size() != s2.size()) fail(ErrorCode::LengthMismatch, "sequences of different length");
  const CanonicalResult c1 = canonicalize(s1), c2 = canonicalize(s2);
  if (c1.tag != c2.tag) return false;
  const MatSeq &f1 = c1.form, &f2 = c2.form;
  switch (c1.tag) {
    case CanonicalTag::AllScalar: return s1 == s2;
    case CanonicalTag::CommDiagonal: {
      bool same = true, swapped = true;
      for (std::size_t i = 0; i < f1.size(); ++i) {
        same = same && f1[i].a() == f2[i].a() && f1[i].d() == f2[i].d();
        swapped = swapped && f1[i].a() == f2[i].d() && f1[i].d() == f2[i].a();
      }
      return same || swapped;
    }
    case CanonicalTag::CommJordanLike: {
      // a = a' and b = lambda b' for one nonzero lambda
      std::optional<std::size_t> ref;
      for (std::size_t i = 0; i < f1.size(); ++i) {
        if (!(f1[i].a() == f2[i].a()) || !(f1[i].d() == f2[i].d())) return false;
        if (f1[i].b().is_zero() != f2[i].b().is_zero()) return false;
        if (!f1[i].b().is_zero() && !ref) ref = i;
      }
      if (!ref) return true;
      for (std::size_t i = 0; i < f1.size(); ++i)
        if (!(f1[i].b() * f2[*ref].b() == f1[*ref].b() * f2[i].b())) return false;
      return true;
    }
    default: fail(ErrorCode::InternalInconsistency, "commutative sequence with a non-commutative tag");
  }
}

MatSeq dual_sequence(const MatSeq& s) {
  require_field(s.ring());
  if (s.size() < 2 || !s[0].is_diagonal() || s[0].is_scalar() || !s[1].b().is_one() || s[1].c().is_zero())
    fail(ErrorCode::NotCanonical1a, "expected A_1 diagonal non-scalar, b_2 = 1 and c_2 != 0");
  Tower tw{s.ring(), std::nullopt};
  const Scalar x = tw.sqrt(-s[1].c());
  const GroupElement g(Mat2(Scalar::zero(tw.ring), x.inverse(), -x, Scalar::zero(tw.ring)));
  return conjugate(g, s.promote(tw.ring));
}

namespace {

Ring reconstruction_field(const Ring& r) {
  if (r.kind() == RingKind::Integers) return Ring::rationals();
  require_field(r);
  require_odd_char(r);
  return r;
}

}  // namespace

MatSeq reconstruct_semisimple(const PhiVector& v) {
  const Ring base = reconstruction_field(v.ring);
  if (v.n < 2) fail(ErrorCode::LengthTooShort, "need n >= 2");
  if (v.values.size() != 4 * v.n - 3)
    fail(ErrorCode::LengthMismatch, "expected " + std::to_string(4 * v.n - 3) + " values, got " + std::to_string(v.values.size()));
  Tower tw{base, std::nullopt};
  auto val = [&](std::size_t i) { return v.values[i].promote(base); };
  const Scalar t1 = val(0), t11 = val(1);
  const Scalar disc = 2 * t11 - t1 * t1;
  if (disc.is_zero()) fail(ErrorCode::DegenerateDiscriminant, "the first term would have a repeated eigenvalue");
  const Scalar r = tw.sqrt(disc);
  const Ring& k = tw.ring;
  auto at = [&](std::size_t i) { return val(i).promote(k); };
  const Scalar two = Scalar::from_integer(k, 2), one = Scalar::one(k), zero = Scalar::zero(k);

  const Scalar a1 = (t1.promote(k) + r).exact_div(two), d1 = (t1.promote(k) - r).exact_div(two);
  const Scalar e1 = r;
  const Scalar t2 = at(2), t22 = at(3), t12 = at(4);
  const Scalar a2 = (t12 - d1 * t2).exact_div(e1), d2 = t2 - a2;
  const Scalar c2 = (t22 - a2 * a2 - d2 * d2).exact_div(two);
  if (c2.is_zero()) fail(ErrorCode::ZeroC2, "the first two terms would commute");

  std::vector<Mat2> terms{Mat2::diag(a1, d1), Mat2(a2, one, c2, d2)};
  for (std::size_t j = 2; j < v.n; ++j) {
    const std::size_t base_index = 5 + 4 * (j - 2);
    // unknowns (a, b, c, d)
    ScalarMatrix m{{one, zero, zero, one}, {a1, zero, zero, d1}, {a2, c2, one, d2}, {zero, -(c2 * e1), e1, zero}};
    auto sol = solve_square(m, {at(base_index), at(base_index + 1), at(base_index + 2), at(base_index + 3)});
    if (!sol) fail(ErrorCode::InternalInconsistency, "reconstruction system is singular");
    terms.emplace_back((*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]);
  }
  return MatSeq(std::move(terms));
}

std::pair<MatSeq, MatSeq> reconstruct_triangular(const PsiValue& w) {
  const Ring base = reconstruction_field(w.ring);
  if (w.full_plucker) fail(ErrorCode::NotApplicable, "reconstruction needs [delta_12 : ... : delta_1n] with delta_12 != 0");
  if (w.traces.size() % 2 != 0 || w.traces.size() < 4) fail(ErrorCode::LengthTooShort, "need 2n traces with n >= 2");
  const std::size_t n = w.traces.size() / 2;
  if (w.proj.size() != n - 1) fail(ErrorCode::LengthMismatch, "projective point must have n - 1 coordinates");
  if (!w.proj[0].is_one()) fail(ErrorCode::NotApplicable, "projective point must start with 1");

  Tower tw{base, std::nullopt};
  const Scalar t1 = w.traces[0].promote(base), t11 = w.traces[1].promote(base);
  const Scalar disc = 2 * t11 - t1 * t1;
  if (disc.is_zero()) fail(ErrorCode::DegenerateDiscriminant, "the first term would have a repeated eigenvalue");
  const Scalar r = tw.sqrt(disc);
  const Ring& k = tw.ring;
  const Scalar two = Scalar::from_integer(k, 2), zero = Scalar::zero(k);
  const Scalar a1 = (t1.promote(k) + r).exact_div(two), d1 = (t1.promote(k) - r).exact_div(two);

  std::vector<Mat2> first{Mat2::diag(a1, d1)}, flipped{Mat2::diag(d1, a1)};
  for (std::size_t j = 1; j < n; ++j) {
    const Scalar tk = w.traces[2 * j].promote(base).promote(k), t1k = w.traces[2 * j + 1].promote(base).promote(k);
    const Scalar ak = (t1k - d1 * tk).exact_div(r), dk = tk - ak;
    // with b_1 = 0 and b_2 = 1 the normalized coordinate delta_1k / delta_12 is b_k
    const Scalar bk = w.proj[j - 1].promote(base).promote(k);
    first.emplace_back(ak, bk, zero, dk);
    flipped.emplace_back(dk, bk, zero, ak);
  }
  return {MatSeq(std::move(first)), MatSeq(std::move(flipped))};
}

std::pair<MatSeq, Desingularization> desingularize_for_reconstruction(const MatSeq& s) {
  Classification cls = classify_with_permutation(s);
  const MatSeq p = permuted(s, cls.permutation);
  std::vector<Mat2> t = p.terms();
  if (cls.tag == CanonicalTag::Stable1b) {
    t[0] = p[0] - p[1];
    t[1] = p[0] + p[1];
    return {MatSeq(std::move(t)), Desingularization{DesingularizationKind::Pair1b, cls.permutation}};
  }
  if (cls.tag == CanonicalTag::Stable1c) {
    t[1] = p[1] + p[2];
    t[2] = p[1] - p[2];
    return {MatSeq(std::move(t)), Desingularization{DesingularizationKind::Triple1c, cls.permutation}};
  }
  fail(ErrorCode::NotApplicable, "only cases 1b and 1c are re-based, got " + std::string(to_string(cls.tag)));
}

MatSeq undo_desingularization(const MatSeq& t, const Desingularization& how) {
  if (t.size() != how.permutation.size()) fail(ErrorCode::LengthMismatch, "permutation length differs from the sequence");
  const Scalar half = Scalar::from_integer(t.ring(), 2).inverse();
  std::vector<Mat2> p = t.terms();
  if (how.kind == DesingularizationKind::Pair1b) {
    p[0] = half * (t[0] + t[1]);
    p[1] = half * (t[1] - t[0]);
  } else {
    p[1] = half * (t[1] + t[2]);
    p[2] = half * (t[1] - t[2]);
  }
  std::vector<Mat2> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[how.permutation[i]] = p[i];
  return MatSeq(std::move(out));
}

}  // namespace matseq
