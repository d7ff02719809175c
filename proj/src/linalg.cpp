#include "matseq/linalg.hpp"

namespace matseq {

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m0, std::size_t cols, const Ring& r) {
  ScalarMatrix m;
  for (const auto& row : m0) {
    if (row.size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix");
    std::vector<Scalar> pr;
    for (const auto& x : row) pr.push_back(x.promote(r));
    m.push_back(std::move(pr));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols && rank < m.size(); ++j) {
    std::size_t p = rank;
    while (p < m.size() && m[p][j].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    if (r.is_field()) {
      const Scalar inv = m[rank][j].inverse();
      for (auto& x : m[rank]) x *= inv;
    }
    const Scalar piv = m[rank][j];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][j].is_zero()) continue;
      const Scalar f = m[i][j];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = piv * m[i][k] - f * m[rank][k];
    }
    pivot_cols.push_back(j);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(r));
    Scalar prod = Scalar::one(r);
    for (std::size_t k = 0; k < rank; ++k) prod *= m[k][pivot_cols[k]];
    v[f] = prod;
    for (std::size_t k = 0; k < rank; ++k) {
      Scalar others = Scalar::one(r);
      for (std::size_t s = 0; s < rank; ++s)
        if (s != k) others *= m[s][pivot_cols[s]];
      v[pivot_cols[k]] = -(m[k][f] * others);
    }
    std::vector<Scalar> w = primitive_vector(v);
    for (auto& x : w) x = x.promote(r);
    basis.push_back(std::move(w));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_square(ScalarMatrix a, std::vector<Scalar> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) fail(ErrorCode::InvalidInput, "system size mismatch");
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && a[p][j].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[j]);
    std::swap(rhs[p], rhs[j]);
    const Scalar inv = a[j][j].inverse();
    for (auto& x : a[j]) x *= inv;
    rhs[j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || a[i][j].is_zero()) continue;
      const Scalar f = a[i][j];
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[j][k];
      rhs[i] -= f * rhs[j];
    }
  }
  return rhs;
}

Scalar det3(const ScalarMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace matseq
