#include "trialg/modp.hpp"

#include "trialg/simd/modp_kernels.hpp"

namespace trialg::modp {

namespace {

using simd::kPrime;

// Echelon basis in RREF form over GF(p), stored densely.
class Echelon {
public:
  Echelon(std::size_t cols, const simd::ModpKernels &kernels) : cols_(cols), kernels_(kernels) {}

  // Reduces v against the basis; if something survives it becomes a new
  // basis row and true is returned.
  bool insert(std::vector<double> &v) {
    for (std::size_t p = 0; p < pivots_.size(); ++p) {
      const double x = v[pivots_[p]];
      if (x != 0.0) {
        kernels_.axpy(v.data(), basis_[p].data(), static_cast<double>(kPrime - static_cast<std::uint64_t>(x)), cols_);
      }
    }
    std::size_t lead = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0.0) {
        lead = c;
        break;
      }
    }
    if (lead == cols_) return false;
    kernels_.scale(v.data(), static_cast<double>(simd::inv_mod(static_cast<std::uint64_t>(v[lead]))), cols_);
    for (auto &row : basis_) {
      const double x = row[lead];
      if (x != 0.0) {
        kernels_.axpy(row.data(), v.data(), static_cast<double>(kPrime - static_cast<std::uint64_t>(x)), cols_);
      }
    }
    pivots_.push_back(lead);
    basis_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  std::size_t cols_;
  const simd::ModpKernels &kernels_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<double>> basis_;
};

bool densify(const SparseRow &row, std::vector<double> &out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (const auto &e : row) {
    std::uint64_t r = 0;
    if (!reduce_mod(e.value, kPrime, r)) return false;
    out[e.col] = static_cast<double>(r);
  }
  return true;
}

} // namespace

std::optional<std::vector<std::size_t>> independent_rows(const std::vector<SparseRow> &rows, std::size_t cols) {
  return independent_rows(rows, cols, simd::active_kernels());
}

std::optional<std::vector<std::size_t>> independent_rows(const std::vector<SparseRow> &rows, std::size_t cols,
                                                         const simd::ModpKernels &kernels) {
  Echelon ech(cols, kernels);
  std::vector<std::size_t> picked;
  std::vector<double> dense(cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (ech.rank() == cols) break;
    if (!densify(rows[i], dense)) return std::nullopt;
    if (ech.insert(dense)) {
      picked.push_back(i);
      dense.assign(cols, 0.0);
    }
  }
  return picked;
}

std::optional<std::size_t> rank(const SparseMatrix &m) {
  auto picked = independent_rows(m.row_data(), m.cols());
  if (!picked) return std::nullopt;
  return picked->size();
}

} // namespace trialg::modp
