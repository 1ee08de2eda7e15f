#pragma once

// Brute-force reference computations for the tests. Everything here works on
// explicit dense matrices with matrix-unit bases and plain Gauss-Jordan
// elimination; nothing is shared with the library's sparse pipeline.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Mat = std::vector<Row>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Row(c)); }

inline Mat mul(const Mat &a, const Mat &b) {
  Mat out = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat add(const Mat &a, const Mat &b, const Q &s = 1) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[i][j] += s * b[i][j];
  return out;
}

inline Mat scaled(const Mat &a, const Q &s) {
  Mat out = a;
  for (auto &r : out)
    for (auto &x : r) x *= s;
  return out;
}

inline Mat br(const Mat &a, const Mat &b) { return add(mul(a, b), mul(b, a), -1); }

// Subalgebra of n x n matrices spanned by the units E_pq with pattern[p][q],
// enumerated row-major.
struct UnitAlgebra {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> units;

  std::size_t dim() const { return units.size(); }

  Mat unit(std::size_t i) const {
    Mat m = zeros(n, n);
    m[units[i].first][units[i].second] = 1;
    return m;
  }

  Mat matrix(const Row &c) const {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < c.size(); ++i) m[units[i].first][units[i].second] += c[i];
    return m;
  }

  Row coords(const Mat &m) const {
    Row c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = m[units[i].first][units[i].second];
    return c;
  }
};

inline UnitAlgebra block_triangular(const std::vector<std::size_t> &dims) {
  std::vector<std::size_t> block;
  for (std::size_t b = 0; b < dims.size(); ++b)
    for (std::size_t s = 0; s < dims[b]; ++s) block.push_back(b);
  UnitAlgebra a;
  a.n = block.size();
  for (std::size_t p = 0; p < a.n; ++p)
    for (std::size_t q = 0; q < a.n; ++q)
      if (block[p] <= block[q]) a.units.emplace_back(p, q);
  return a;
}

inline UnitAlgebra upper_triangular(std::size_t n) { return block_triangular(std::vector<std::size_t>(n, 1)); }

// Row-reduces in place to RREF; returns pivot columns.
inline std::vector<std::size_t> gauss_jordan(Mat &m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto &x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t rank(Mat m, std::size_t cols) { return gauss_jordan(m, cols).size(); }

// Kernel basis: one vector per free column, that column set to 1.
inline Mat nullspace(Mat m, std::size_t cols) {
  const auto piv = gauss_jordan(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : piv) is_pivot[p] = 1;
  Mat out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(v);
  }
  return out;
}

// Rows are appended one at a time and reduced against the running RREF, so
// the dense system is never materialised in full.
class RunningRref {
public:
  explicit RunningRref(std::size_t cols) : cols_(cols) {}

  void add(Row v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v[piv_[r]] == 0) continue;
      const Q f = v[piv_[r]];
      for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
    std::size_t lead = 0;
    while (lead < cols_ && v[lead] == 0) ++lead;
    if (lead == cols_) return;
    const Q inv = 1 / v[lead];
    for (auto &x : v) x *= inv;
    for (auto &row : rows_) {
      if (row[lead] == 0) continue;
      const Q f = row[lead];
      for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(lead);
  }

  std::size_t rank() const { return rows_.size(); }
  Mat nullspace() const { return oracle::nullspace(rows_, cols_); }

private:
  std::size_t cols_;
  Mat rows_;
  std::vector<std::size_t> piv_;
};

// Kernel of the law over all dim^3 coefficients t[i][j][k] (flattened
// (i * d + j) * d + k): every unit map (x, y) -> x_i y_j b_k is substituted
// into the defining identities at every basis triple, giving one dense
// column per unknown; the rows of the transposed system are then reduced.
inline Mat law_kernel(const UnitAlgebra &alg, const std::string &law) {
  const std::size_t d = alg.dim(), unknowns = d * d * d;
  std::vector<Mat> b;
  for (std::size_t i = 0; i < d; ++i) b.push_back(alg.unit(i));

  std::vector<Row> cols;
  for (std::size_t u = 0; u < unknowns; ++u) {
    const std::size_t ui = u / (d * d), uj = u / d % d, uk = u % d;
    auto phi = [&](const Mat &x, const Mat &y) {
      const Q s = alg.coords(x)[ui] * alg.coords(y)[uj];
      return scaled(b[uk], s);
    };
    Row col;
    auto push = [&](const Mat &m) {
      const Row c = alg.coords(m);
      col.insert(col.end(), c.begin(), c.end());
    };
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          const Mat &X = b[x], &Y = b[y], &Z = b[z];
          if (law == "lie-bider" || law == "lie-deriv-1")
            push(add(add(phi(br(X, Z), Y), br(phi(X, Y), Z), -1), br(X, phi(Z, Y)), -1));
          if (law == "lie-bider" || law == "lie-deriv-2")
            push(add(add(phi(X, br(Y, Z)), br(phi(X, Y), Z), -1), br(Y, phi(X, Z)), -1));
          if (law == "assoc-bider") {
            push(add(add(phi(mul(X, Z), Y), mul(phi(X, Y), Z), -1), mul(X, phi(Z, Y)), -1));
            push(add(add(phi(X, mul(Y, Z)), mul(phi(X, Y), Z), -1), mul(Y, phi(X, Z)), -1));
          }
        }
    cols.push_back(std::move(col));
  }

  RunningRref rref(unknowns);
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    Row row(unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) row[u] = cols[u][r];
    rref.add(std::move(row));
  }
  return rref.nullspace();
}

} // namespace oracle
