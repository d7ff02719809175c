#include "matseq/invariants.hpp"

#include "matseq/linalg.hpp"

namespace matseq {

namespace {

void require_odd_char(const Ring& r) {
  if (r.characteristic() == 2) fail(ErrorCode::Char2Unsupported, "identity needs 1/4, ring is " + r.name());
}

void check_index(const MatSeq& s, std::size_t i) {
  if (i >= s.size()) fail(ErrorCode::BadIndex, "index " + std::to_string(i) + " out of range");
}

}  // namespace

Scalar trace_word(const MatSeq& s, std::span<const std::size_t> word) {
  if (word.empty()) fail(ErrorCode::BadIndex, "empty word");
  for (auto i : word) check_index(s, i);
  Mat2 prod = s[word[0]];
  for (std::size_t k = 1; k < word.size(); ++k) prod = prod * s[word[k]];
  return prod.trace();
}

Scalar tau(const Mat2& x, const Mat2& y) { return 2 * (x * y).trace() - x.trace() * y.trace(); }

Scalar sigma(const Mat2& x, const Mat2& y) { return commutator(x, y).det(); }

Scalar big_delta(const Mat2& x, const Mat2& y, const Mat2& z) {
  const Scalar t = (x * y * z - z * y * x).trace();
  return t * t;
}

Scalar tau_explicit(const Mat2& x, const Mat2& y) {
  return x.e() * y.e() + 2 * x.b() * y.c() + 2 * x.c() * y.b();
}

Scalar sigma_explicit(const Mat2& x, const Mat2& y) {
  const Scalar bc = x.b() * y.c() - x.c() * y.b();
  return (x.b() * y.e() - x.e() * y.b()) * (x.c() * y.e() - x.e() * y.c()) - bc * bc;
}

Scalar delta_explicit(const Mat2& x, const Mat2& y, const Mat2& z) {
  const ScalarMatrix m{{x.b(), x.e(), x.c()}, {y.b(), y.e(), y.c()}, {z.b(), z.e(), z.c()}};
  const Scalar d = det3(m);
  return d * d;
}

Scalar sigma_from_tau(const Mat2& x, const Mat2& y) {
  require_odd_char(x.ring());
  const Scalar t12 = tau(x, y);
  const Scalar four = Scalar::from_integer(x.ring(), 4);
  return (tau(x, x) * tau(y, y) - t12 * t12).exact_div(four);
}

Scalar delta_from_gram(const Mat2& x, const Mat2& y, const Mat2& z) {
  require_odd_char(x.ring());
  const Mat2* t[3] = {&x, &y, &z};
  ScalarMatrix g(3, std::vector<Scalar>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = tau(*t[i], *t[j]);
  const Scalar four = Scalar::from_integer(x.ring(), 4);
  return (-det3(g)).exact_div(four);
}

Scalar drensky_u(const MatSeq& s, std::size_t j, std::size_t k) {
  check_index(s, j);
  check_index(s, k);
  const std::size_t jk[2] = {j, k};
  return 2 * trace_word(s, jk) - s[j].trace() * s[k].trace();
}

Scalar drensky_s(const MatSeq& s, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t fwd[3] = {j, k, l};
  const std::size_t bwd[3] = {l, k, j};
  return trace_word(s, fwd) - trace_word(s, bwd);
}

std::array<Scalar, 2> drensky_relation_values(const MatSeq& s, const RelationIndices& idx) {
  const auto& [a, b, c, d, e, f] = idx.product;
  ScalarMatrix u{{drensky_u(s, a, d), drensky_u(s, a, e), drensky_u(s, a, f)},
                 {drensky_u(s, b, d), drensky_u(s, b, e), drensky_u(s, b, f)},
                 {drensky_u(s, c, d), drensky_u(s, c, e), drensky_u(s, c, f)}};
  Scalar first = 4 * drensky_s(s, a, b, c) * drensky_s(s, d, e, f) + det3(u);

  const auto& [p, q, r, w, x] = idx.alternating;
  Scalar second = drensky_u(s, x, p) * drensky_s(s, q, r, w) - drensky_u(s, x, q) * drensky_s(s, p, r, w) +
                  drensky_u(s, x, r) * drensky_s(s, p, q, w) - drensky_u(s, x, w) * drensky_s(s, p, q, r);
  return {first, second};
}

bool check_drensky_relations(const MatSeq& s, const RelationIndices& idx) {
  require_odd_char(s.ring());
  auto v = drensky_relation_values(s, idx);
  return v[0].is_zero() && v[1].is_zero();
}

}  // namespace matseq
