#include "trialg/sparse_matrix.hpp"

#include "trialg/modp.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace trialg {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::MixedAlgebras: return "MixedAlgebras";
  case ErrorKind::NotAssociative: return "NotAssociative";
  case ErrorKind::BadUnit: return "BadUnit";
  case ErrorKind::BadSplit: return "BadSplit";
  case ErrorKind::SingleBlock: return "SingleBlock";
  case ErrorKind::Disconnected: return "Disconnected";
  case ErrorKind::BadPoset: return "BadPoset";
  case ErrorKind::NotIdempotent: return "NotIdempotent";
  case ErrorKind::NotTriangular: return "NotTriangular";
  case ErrorKind::ZeroBimodule: return "ZeroBimodule";
  case ErrorKind::NotFaithful: return "NotFaithful";
  case ErrorKind::NotInProjection: return "NotInProjection";
  case ErrorKind::NotCentral: return "NotCentral";
  case ErrorKind::NotVanishing: return "NotVanishing";
  case ErrorKind::NotLieBider: return "NotLieBider";
  case ErrorKind::NoCentralLambda: return "NoCentralLambda";
  case ErrorKind::ResidualNotCentral: return "ResidualNotCentral";
  case ErrorKind::Inconsistent: return "Inconsistent";
  case ErrorKind::BadInput: return "BadInput";
  case ErrorKind::FingerprintMismatch: return "FingerprintMismatch";
  }
  return "Unknown";
}

namespace {

void normalize_row(SparseRow &row) {
  std::sort(row.begin(), row.end(), [](const SparseEntry &a, const SparseEntry &b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(row.size());
  for (auto &e : row) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const SparseEntry &e) { return sgn(e.value) == 0; });
  row = std::move(out);
}

const Rational *find_entry(const SparseRow &row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const SparseEntry &e, std::uint32_t c) { return e.col < c; });
  if (it != row.end() && it->col == col) return &it->value;
  return nullptr;
}

// a - factor * b, both sorted.
SparseRow sub_scaled(const SparseRow &a, const Rational &factor, const SparseRow &b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, -factor * b[j].value});
      ++j;
    } else {
      Rational v = a[i].value - factor * b[j].value;
      if (sgn(v) != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Incremental exact RREF over a block with `cols` local columns. Each
// inserted row is reduced against the current basis; survivors take their
// leading column as pivot and are back-substituted into the existing rows,
// so the basis is in reduced echelon form after every insertion.
class ExactEchelon {
public:
  explicit ExactEchelon(std::size_t cols) : acc_(cols), touched_flag_(cols, 0), pivot_row_(cols, -1) {}

  void insert(const SparseRow &row) {
    touched_.clear();
    for (const auto &e : row) {
      touch(e.col);
      acc_[e.col] = e.value;
    }
    for (const auto &e : row) {
      const int p = pivot_row_[e.col];
      if (p < 0) continue;
      const Rational coef = e.value;
      for (const auto &pe : rows_[p]) {
        touch(pe.col);
        acc_[pe.col] -= coef * pe.value;
      }
    }
    std::sort(touched_.begin(), touched_.end());
    SparseRow reduced;
    for (auto c : touched_) {
      if (sgn(acc_[c]) != 0) reduced.push_back({c, acc_[c]});
      acc_[c] = 0;
      touched_flag_[c] = 0;
    }
    if (reduced.empty()) return;

    const std::uint32_t lead = reduced.front().col;
    const Rational inv = 1 / reduced.front().value;
    for (auto &e : reduced) e.value *= inv;
    for (auto &r : rows_) {
      if (const Rational *x = find_entry(r, lead)) {
        const Rational factor = *x;
        r = sub_scaled(r, factor, reduced);
      }
    }
    pivot_row_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(reduced));
  }

  std::size_t rank() const { return rows_.size(); }

  // Rows ordered by pivot column.
  std::vector<SparseRow> take_sorted() {
    std::vector<SparseRow> out = std::move(rows_);
    std::sort(out.begin(), out.end(), [](const SparseRow &a, const SparseRow &b) { return a.front().col < b.front().col; });
    return out;
  }

private:
  void touch(std::uint32_t c) {
    if (!touched_flag_[c]) {
      touched_flag_[c] = 1;
      touched_.push_back(c);
    }
  }

  std::vector<Rational> acc_;
  std::vector<char> touched_flag_;
  std::vector<std::uint32_t> touched_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow> rows_;
};

std::vector<SparseRow> exact_block_rref(const std::vector<SparseRow> &rows, std::size_t cols) {
  ExactEchelon ech(cols);
  for (const auto &r : rows) ech.insert(r);
  return ech.take_sorted();
}

// Kernel basis of an RREF given as sorted rows over `cols` columns.
std::vector<Vector> kernel_of(const std::vector<SparseRow> &rref_rows, std::size_t cols) {
  std::vector<int> free_index(cols, 0);
  for (const auto &r : rref_rows) free_index[r.front().col] = -1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (free_index[c] == 0) {
      free_index[c] = static_cast<int>(free_cols.size());
      free_cols.push_back(c);
    }
  }
  std::vector<Vector> basis(free_cols.size(), zero_vector(cols));
  for (std::size_t k = 0; k < free_cols.size(); ++k) basis[k][free_cols[k]] = 1;
  for (const auto &r : rref_rows) {
    const auto pivot = r.front().col;
    for (std::size_t t = 1; t < r.size(); ++t) {
      const int f = free_index[r[t].col];
      if (f >= 0) basis[f][pivot] = -r[t].value;
    }
  }
  return basis;
}

Rational dot(const SparseRow &row, const Vector &v) {
  Rational s = 0;
  for (const auto &e : row) s += e.value * v[e.col];
  return s;
}

std::vector<SparseRow> block_rref(const std::vector<SparseRow> &rows, std::size_t cols) {
  if (rows.size() <= cols) return exact_block_rref(rows, cols);

  // Many more equations than unknowns: pick a candidate row basis mod p, solve
  // it exactly, and accept only if every row annihilates the exact kernel.
  auto picked = modp::independent_rows(rows, cols);
  if (!picked) return exact_block_rref(rows, cols);
  std::vector<SparseRow> subset;
  subset.reserve(picked->size());
  for (auto i : *picked) subset.push_back(rows[i]);
  auto candidate = exact_block_rref(subset, cols);
  const auto kernel = kernel_of(candidate, cols);
  for (const auto &r : rows) {
    for (const auto &v : kernel) {
      if (sgn(dot(r, v)) != 0) return exact_block_rref(rows, cols);
    }
  }
  return candidate;
}

struct RowKeyHash {
  std::size_t operator()(const SparseRow &r) const {
    std::size_t h = r.size();
    for (const auto &e : r) {
      h = h * 1000003u ^ e.col;
      h = h * 1000003u ^ mpz_get_ui(e.value.get_num_mpz_t()) ^ (sgn(e.value) < 0 ? 0x9e3779b9u : 0u);
      h = h * 1000003u ^ mpz_get_ui(e.value.get_den_mpz_t());
    }
    return h;
  }
};

// Scales a row so its leading coefficient is 1.
SparseRow monic(const SparseRow &r) {
  SparseRow out = r;
  const Rational inv = 1 / r.front().value;
  for (auto &e : out) e.value *= inv;
  return out;
}

} // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  for (auto &t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet index out of range");
    m.rows_[t.row].push_back({static_cast<std::uint32_t>(t.col), std::move(t.value)});
  }
  for (auto &r : m.rows_) normalize_row(r);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector> &rows, std::size_t cols) {
  SparseMatrix m(0, cols);
  for (const auto &r : rows) m.append_dense_row(r);
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), Rational(1)});
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto &r : rows_) n += r.size();
  return n;
}

void SparseMatrix::append_row(SparseRow row) {
  for (const auto &e : row) {
    if (e.col >= cols_) throw std::out_of_range("column index out of range");
  }
  normalize_row(row);
  rows_.push_back(std::move(row));
}

void SparseMatrix::append_dense_row(const Vector &row) {
  if (row.size() != cols_) throw std::invalid_argument("dense row has wrong length");
  SparseRow r;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (sgn(row[c]) != 0) r.push_back({static_cast<std::uint32_t>(c), row[c]});
  }
  rows_.push_back(std::move(r));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Rational *x = find_entry(rows_.at(r), static_cast<std::uint32_t>(c));
  return x ? *x : Rational(0);
}

Vector SparseMatrix::multiply(const Vector &v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  Vector out = zero_vector(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = dot(rows_[i], v);
  return out;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out(rows_.size(), zero_vector(cols_));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto &e : rows_[i]) out[i][e.col] = e.value;
  }
  return out;
}

RrefResult rref(const SparseMatrix &m) {
  const std::size_t cols = m.cols();

  // Drop zero rows and exact duplicates up to scaling.
  std::vector<SparseRow> rows;
  {
    std::unordered_map<SparseRow, char, RowKeyHash> seen;
    for (const auto &r : m.row_data()) {
      if (r.empty()) continue;
      auto key = monic(r);
      if (seen.emplace(key, 0).second) rows.push_back(std::move(key));
    }
  }

  // Rows that share no column never interact during elimination, so the
  // matrix splits into independent blocks (connected components of the
  // row/column incidence graph).
  std::vector<std::uint32_t> parent(cols);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&parent](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto &r : rows) {
    const auto a = find(r.front().col);
    for (std::size_t t = 1; t < r.size(); ++t) {
      const auto b = find(r[t].col);
      if (a != b) parent[b] = a;
    }
  }
  // Component id ordered by smallest column.
  std::vector<int> comp_of_root(cols, -1);
  std::vector<std::vector<std::uint32_t>> comp_cols;
  for (std::uint32_t c = 0; c < cols; ++c) {
    const auto root = find(c);
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<int>(comp_cols.size());
      comp_cols.emplace_back();
    }
    comp_cols[comp_of_root[root]].push_back(c);
  }
  std::vector<std::vector<SparseRow>> comp_rows(comp_cols.size());
  std::vector<std::uint32_t> local_index(cols);
  for (const auto &cc : comp_cols) {
    for (std::uint32_t i = 0; i < cc.size(); ++i) local_index[cc[i]] = i;
  }
  for (auto &r : rows) {
    const int comp = comp_of_root[find(r.front().col)];
    for (auto &e : r) e.col = local_index[e.col];
    comp_rows[comp].push_back(std::move(r));
  }

  std::vector<SparseRow> out_rows;
  for (std::size_t k = 0; k < comp_cols.size(); ++k) {
    if (comp_rows[k].empty()) continue;
    auto block = block_rref(comp_rows[k], comp_cols[k].size());
    for (auto &r : block) {
      for (auto &e : r) e.col = comp_cols[k][e.col];
      out_rows.push_back(std::move(r));
    }
  }
  std::sort(out_rows.begin(), out_rows.end(), [](const SparseRow &a, const SparseRow &b) { return a.front().col < b.front().col; });

  RrefResult result{SparseMatrix(0, cols), {}};
  for (auto &r : out_rows) {
    result.pivots.push_back(r.front().col);
    result.matrix.append_row(std::move(r));
  }
  return result;
}

std::size_t rank(const SparseMatrix &m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace_from_rref(const RrefResult &r) { return kernel_of(r.matrix.row_data(), r.matrix.cols()); }

std::vector<Vector> nullspace(const SparseMatrix &m) { return nullspace_from_rref(rref(m)); }

Vector solve(const SparseMatrix &m, const Vector &rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length does not match row count");
  const std::size_t n = m.cols();
  SparseMatrix aug(0, n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow r = m.row(i);
    if (sgn(rhs[i]) != 0) r.push_back({static_cast<std::uint32_t>(n), rhs[i]});
    aug.append_row(std::move(r));
  }
  const auto red = rref(aug);
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    if (red.pivots[i] == n) throw InconsistentSystem(i);
    const Rational *v = find_entry(red.matrix.row(i), static_cast<std::uint32_t>(n));
    if (v) x[red.pivots[i]] = *v;
  }
  return x;
}

std::size_t rank_of(const std::vector<Vector> &vectors, std::size_t length) {
  return rank(SparseMatrix::from_dense(vectors, length));
}

bool in_span(const std::vector<Vector> &basis, const Vector &v, std::size_t length) {
  auto all = basis;
  all.push_back(v);
  return rank_of(all, length) == rank_of(basis, length);
}

bool span_contains(const std::vector<Vector> &outer, const std::vector<Vector> &inner, std::size_t length) {
  auto all = outer;
  all.insert(all.end(), inner.begin(), inner.end());
  return rank_of(all, length) == rank_of(outer, length);
}

bool same_span(const std::vector<Vector> &a, const std::vector<Vector> &b, std::size_t length) {
  return span_contains(a, b, length) && span_contains(b, a, length);
}

std::vector<Vector> span_basis(const std::vector<Vector> &vectors, std::size_t length) {
  return rref(SparseMatrix::from_dense(vectors, length)).matrix.to_dense();
}

} // namespace trialg
