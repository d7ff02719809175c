#include "matseq/triangular.hpp"

#include "matseq/invariants.hpp"
#include "matseq/linalg.hpp"

namespace matseq {

namespace {

bool commute(const Mat2& x, const Mat2& y) { return commutator(x, y).is_zero(); }

// sigma and Delta through the (b, e, c) coordinates, on precomputed columns.
struct Columns {
  std::vector<Scalar> b, e, c;
  explicit Columns(const MatSeq& s) : b(s.b()), e(s.e()), c(s.c()) {}

  Scalar sigma(std::size_t j, std::size_t k) const {
    const Scalar bc = b[j] * c[k] - c[j] * b[k];
    return (b[j] * e[k] - e[j] * b[k]) * (c[j] * e[k] - e[j] * c[k]) - bc * bc;
  }
  Scalar delta_root(std::size_t i, std::size_t j, std::size_t k) const {
    return det3({{b[i], e[i], c[i]}, {b[j], e[j], c[j]}, {b[k], e[k], c[k]}});
  }
};

bool singlet_ok(const Mat2& x) { return x.is_upper_triangular() || eigenvalues_in_ring(x).has_value(); }

}  // namespace

ReductionInfo maximal_reduction(const MatSeq& s) {
  ReductionInfo info;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_scalar()) continue;
    bool placed = false;
    for (std::size_t k = 0; k < info.kept.size() && !placed; ++k) {
      if (commute(s[info.kept[k]], s[i])) {
        info.classes[k].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      info.kept.push_back(i);
      info.classes.push_back({i});
    }
  }
  return info;
}

std::optional<std::array<Scalar, 2>> eigenvalues_in_ring(const Mat2& x) {
  const Ring& r = x.ring();
  const Scalar tr = x.trace();
  if (r.characteristic() == 2) {
    const Scalar det = x.det();
    for (long v = 0; v < 2; ++v) {
      const Scalar l = Scalar::from_integer(r, v);
      if ((l * l - tr * l + det).is_zero()) return std::array<Scalar, 2>{l, tr - l};
    }
    return std::nullopt;
  }
  auto root = ring_sqrt(x.disc());
  if (!root) return std::nullopt;
  const Scalar two = Scalar::from_integer(r, 2);
  try {
    return std::array<Scalar, 2>{(tr + *root).exact_div(two), (tr - *root).exact_div(two)};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotDivisible) return std::nullopt;  // parity mismatch over Z
    throw;
  }
}

std::array<Scalar, 2> eigenvector(const Mat2& x, const Scalar& lambda) {
  const Mat2 n = x - Mat2::scalar(lambda.promote(x.ring()));
  std::vector<Scalar> v;
  if (!n.a().is_zero() || !n.b().is_zero())
    v = {n.b(), -n.a()};
  else if (!n.c().is_zero() || !n.d().is_zero())
    v = {n.d(), -n.c()};
  else
    v = {Scalar::one(x.ring()), Scalar::zero(x.ring())};
  std::vector<Scalar> w = primitive_vector(v);
  return {w[0].promote(x.ring()), w[1].promote(x.ring())};
}

GroupElement basis_with_first_column(const std::array<Scalar, 2>& v) {
  const Ring r = common_ring(v[0].ring(), v[1].ring());
  const Scalar one = Scalar::one(r), zero = Scalar::zero(r);
  if (r.is_field()) {
    if (!v[0].is_zero()) return GroupElement(Mat2(v[0], zero, v[1], one));
    return GroupElement(Mat2(v[0], one, v[1], zero));
  }
  Bezout bz = bezout(v[0], v[1]);
  if (!bz.g.is_unit()) fail(ErrorCode::InvalidInput, "vector is not primitive");
  return GroupElement(Mat2(v[0], -bz.q, v[1], bz.p));
}

std::optional<TriangularizationWitness> singlet_triangularizable(const Mat2& x) {
  const MatSeq one(std::vector<Mat2>{x});
  if (x.is_upper_triangular()) return TriangularizationWitness{GroupElement::identity(x.ring()), one};
  auto ev = eigenvalues_in_ring(x);
  if (!ev) return std::nullopt;
  const GroupElement g = basis_with_first_column(eigenvector(x, (*ev)[0])).inverse();
  MatSeq t = conjugate(g, one);
  if (!t.is_upper_triangular()) fail(ErrorCode::InternalInconsistency, "eigenvector did not triangularize " + x.to_string());
  return TriangularizationWitness{g, t};
}

bool pair_triangularizable(const Mat2& x, const Mat2& y) {
  return sigma(x, y).is_zero() && singlet_ok(x) && singlet_ok(y);
}

bool is_triangularizable(const MatSeq& s) {
  const Columns col(s);
  const std::size_t n = s.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (!col.sigma(j, k).is_zero()) return false;
  for (const auto& m : s)
    if (!singlet_ok(m)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!col.delta_root(i, j, k).is_zero()) return false;
  return true;
}

bool is_triangularizable_fast(const MatSeq& s, FastEngineStats* stats) {
  const ReductionInfo red = maximal_reduction(s);
  const std::size_t l = red.reduced_length();
  FastEngineStats local;
  FastEngineStats& st = stats ? *stats : local;
  st = FastEngineStats{};
  st.reduced_length = l;
  if (l == 0) return true;
  const MatSeq kept = subsequence(s, red.kept);
  if (l <= 3) {
    st.sigma_evaluations = l * (l - 1) / 2;
    return is_triangularizable(kept);
  }
  for (const auto& m : kept)
    if (!singlet_ok(m)) return false;
  const Columns col(kept);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < l; ++k) {
      ++st.sigma_evaluations;
      if (!col.sigma(j, k).is_zero()) return false;
    }
  return true;
}

std::optional<TriangularizationWitness> triangularize(const MatSeq& s) {
  if (!is_triangularizable(s)) return std::nullopt;
  const GroupElement id = GroupElement::identity(s.ring());
  if (s.is_upper_triangular()) return TriangularizationWitness{id, s};
  const Mat2* anchor = nullptr;
  for (const auto& m : s)
    if (!m.is_scalar()) {
      anchor = &m;
      break;
    }
  auto ev = eigenvalues_in_ring(*anchor);
  if (!ev) fail(ErrorCode::InternalInconsistency, "triangularizable sequence with a term lacking eigenvalues");
  for (const Scalar& lambda : *ev) {
    const GroupElement g = basis_with_first_column(eigenvector(*anchor, lambda)).inverse();
    MatSeq t = conjugate(g, s);
    if (t.is_upper_triangular()) return TriangularizationWitness{g, t};
  }
  fail(ErrorCode::InternalInconsistency, "no common eigenvector found for a triangularizable sequence");
}

bool is_commutative(const MatSeq& s) {
  const Mat2* anchor = nullptr;
  for (const auto& m : s)
    if (!m.is_scalar()) {
      anchor = &m;
      break;
    }
  if (!anchor) return true;
  for (const auto& m : s)
    if (!commute(*anchor, m)) return false;
  return true;
}

}  // namespace matseq
