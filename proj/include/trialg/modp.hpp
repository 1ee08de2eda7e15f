#pragma once

#include "trialg/simd/modp_kernels.hpp"
#include "trialg/sparse_matrix.hpp"

#include <optional>
#include <vector>

namespace trialg::modp {

// Greedy maximal independent subset of `rows` over GF(p), scanning in input
// order. Column indices must be < cols. Returns nullopt when some entry's
// denominator vanishes mod p, in which case the caller must fall back to
// exact elimination.
std::optional<std::vector<std::size_t>> independent_rows(const std::vector<SparseRow> &rows, std::size_t cols);
std::optional<std::vector<std::size_t>> independent_rows(const std::vector<SparseRow> &rows, std::size_t cols,
                                                         const simd::ModpKernels &kernels);

std::optional<std::size_t> rank(const SparseMatrix &m);

} // namespace trialg::modp
