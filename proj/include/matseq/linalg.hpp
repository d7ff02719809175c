#pragma once

#include <optional>
#include <vector>

#include "matseq/rings.hpp"

namespace matseq {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Basis of the right kernel of `m` (rows of length `cols`) over any supported
/// integral domain. Elimination is fraction-free; each basis vector is made
/// primitive (see `primitive_vector`) and returned over `r`.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m, std::size_t cols, const Ring& r);

/// Unique solution of a square system over a field, or nullopt when singular.
std::optional<std::vector<Scalar>> solve_square(ScalarMatrix a, std::vector<Scalar> rhs);

Scalar det3(const ScalarMatrix& m);

}  // namespace matseq
