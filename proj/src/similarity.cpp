#include "matseq/similarity.hpp"

#include "matseq/invariants.hpp"
#include "matseq/linalg.hpp"
#include "matseq/triangular.hpp"

namespace matseq {

namespace {

// Rows of g A - B g = 0 in the unknowns (g11, g12, g21, g22).
void append_conjugacy_rows(ScalarMatrix& m, const Mat2& x, const Mat2& y) {
  const Scalar z = Scalar::zero(x.ring());
  m.push_back({x.a() - y.a(), x.c(), -y.b(), z});
  m.push_back({x.b(), x.d() - y.a(), z, -y.b()});
  m.push_back({-y.c(), z, x.a() - y.d(), x.c()});
  m.push_back({z, -y.c(), x.b(), x.d() - y.d()});
}

Mat2 as_matrix(const std::vector<Scalar>& v) { return Mat2(v[0], v[1], v[2], v[3]); }

// An element of span(basis) with nonzero determinant, if the span has one.
// det is a quadratic form on the span, so if it is not identically zero it is
// nonzero at some e_i or e_i + e_j.
std::optional<Mat2> invertible_in_span(const std::vector<std::vector<Scalar>>& basis) {
  for (const auto& v : basis) {
    Mat2 g = as_matrix(v);
    if (!g.det().is_zero()) return g;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Mat2 g = as_matrix(basis[i]) + as_matrix(basis[j]);
      if (!g.det().is_zero()) return g;
    }
  return std::nullopt;
}

bool intertwines(const Mat2& g, const MatSeq& s1, const MatSeq& s2) {
  for (std::size_t j = 0; j < s1.size(); ++j)
    if (!(g * s1[j] == s2[j] * g)) return false;
  return true;
}

void require_field(const Ring& r, const char* what) {
  if (!r.is_field()) fail(ErrorCode::UnsupportedRing, std::string(what) + " needs a field, got " + r.name());
}

bool some_sigma_or_delta(const MatSeq& s) {
  const std::size_t n = s.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (!sigma(s[j], s[k]).is_zero()) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!delta_explicit(s[i], s[j], s[k]).is_zero()) return true;
  return false;
}

}  // namespace

std::optional<SimilarityWitness> are_similar(const MatSeq& s1, const MatSeq& s2) {
  if (s1.size() != s2.size()) fail(ErrorCode::LengthMismatch, "sequences of different length");
  if (!(s1.ring() == s2.ring())) fail(ErrorCode::RingMismatch, s1.ring().name() + " vs " + s2.ring().name());
  const Ring& r = s1.ring();
  for (std::size_t j = 0; j < s1.size(); ++j)
    if (!(s1[j].trace() == s2[j].trace()) || !(s1[j].det() == s2[j].det())) return std::nullopt;

  std::optional<std::size_t> anchor;
  for (std::size_t j = 0; j < s1.size() && !anchor; ++j)
    if (!s1[j].is_scalar()) anchor = j;
  if (!anchor) {
    if (s1 == s2) return SimilarityWitness{Mat2::identity(r), false};
    return std::nullopt;
  }

  ScalarMatrix system;
  append_conjugacy_rows(system, s1[*anchor], s2[*anchor]);
  for (std::size_t k = *anchor + 1; k < s1.size(); ++k) {
    if (!commutator(s1[*anchor], s1[k]).is_zero()) {
      // non-commuting pair: the solution space is at most a line
      append_conjugacy_rows(system, s1[k], s2[k]);
      break;
    }
  }
  auto g = invertible_in_span(nullspace(system, 4, r));
  if (!g || !intertwines(*g, s1, s2)) return std::nullopt;
  return SimilarityWitness{*g, !g->det().is_unit()};
}

bool triple_reduction_check(const MatSeq& s1, const MatSeq& s2) {
  if (s1.size() != s2.size()) fail(ErrorCode::LengthMismatch, "sequences of different length");
  const std::size_t n = s1.size();
  auto check = [&](std::initializer_list<std::size_t> idx) {
    std::vector<std::size_t> v(idx);
    return are_similar(subsequence(s1, v), subsequence(s2, v)).has_value();
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!check({i})) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!check({i, j})) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (!check({i, j, k})) return false;
    }
  }
  return true;
}

std::vector<std::vector<Scalar>> centralizer_basis(const MatSeq& s) {
  ScalarMatrix system;
  for (const auto& m : s) append_conjugacy_rows(system, m, m);
  return nullspace(system, 4, s.ring());
}

bool is_stable(const MatSeq& s) {
  require_field(s.ring(), "stability");
  return some_sigma_or_delta(s);
}

bool is_semisimple(const MatSeq& s) {
  require_field(s.ring(), "semisimplicity");
  if (some_sigma_or_delta(s)) return true;
  if (!is_commutative(s)) return false;
  for (const auto& m : s)
    if (!m.is_scalar()) return !m.disc().is_zero();
  return true;
}

PhiVector phi_prime(const MatSeq& s) {
  if (s.ring().characteristic() == 2) fail(ErrorCode::Char2Unsupported, "the reduced invariant map needs char != 2");
  if (s.size() < 2) fail(ErrorCode::LengthTooShort, "the reduced invariant map needs at least two terms");
  auto t = [&](std::initializer_list<std::size_t> w) {
    std::vector<std::size_t> v(w);
    return trace_word(s, v);
  };
  PhiVector out{s.ring(), s.size(), {}, false};
  out.values = {t({0}), t({0, 0}), t({1}), t({1, 1}), t({0, 1})};
  for (std::size_t k = 2; k < s.size(); ++k) {
    out.values.push_back(t({k}));
    out.values.push_back(t({0, k}));
    out.values.push_back(t({1, k}));
    out.values.push_back(drensky_s(s, 0, 1, k));
  }
  out.in_injectivity_domain =
      !s[0].disc().is_zero() && !commutator(s[0], s[1]).is_zero() && some_sigma_or_delta(s);
  return out;
}

std::vector<Scalar> plucker_coordinates(const MatSeq& t) {
  const auto b = t.b(), e = t.e();
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < t.size(); ++j)
    for (std::size_t k = j + 1; k < t.size(); ++k) out.push_back(b[j] * e[k] - e[j] * b[k]);
  return out;
}

PsiValue psi_prime(const MatSeq& s0) {
  if (s0.ring().characteristic() == 2) fail(ErrorCode::Char2Unsupported, "the triangular invariant map needs char != 2");
  if (s0.ring().kind() == RingKind::UniPoly) fail(ErrorCode::UnsupportedRing, "projective normalization needs a field");
  const MatSeq s = s0.ring().kind() == RingKind::Integers ? s0.promote(Ring::rationals()) : s0;
  if (is_commutative(s)) fail(ErrorCode::CommutativeInput, "the sequence is commutative");
  auto w = triangularize(s);
  if (!w) fail(ErrorCode::NotTriangularizable, "the sequence is not triangularizable");

  PsiValue out{s.ring(), {}, {}, false, false};
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::size_t one[] = {k}, pair[] = {0, k};
    out.traces.push_back(trace_word(s, one));
    out.traces.push_back(trace_word(s, pair));
  }
  const std::vector<Scalar> all = plucker_coordinates(w->triangular);
  std::vector<Scalar> first(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(s.size() - 1));
  bool nonzero = false;
  for (const auto& x : first) nonzero = nonzero || !x.is_zero();
  out.full_plucker = !nonzero;
  out.proj = nonzero ? first : all;
  Scalar lead;
  for (const auto& x : out.proj)
    if (!x.is_zero()) {
      lead = x;
      break;
    }
  for (auto& x : out.proj) x = x.exact_div(lead);
  out.in_two_to_one_domain = !s[0].disc().is_zero() && !commutator(s[0], s[1]).is_zero();
  return out;
}

}  // namespace matseq
