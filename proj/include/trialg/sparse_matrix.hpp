#pragma once

#include "trialg/error.hpp"
#include "trialg/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trialg {

struct SparseEntry {
  std::uint32_t col;
  Rational value;

  friend bool operator==(const SparseEntry &, const SparseEntry &) = default;
};

// Sorted by column, no stored zeros.
using SparseRow = std::vector<SparseEntry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

// Row-major sparse matrix over the rationals. Entries are kept sorted by
// (row, col) with no duplicates and no explicit zeros.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Duplicate positions are summed; zeros are dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<Vector> &rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  const SparseRow &row(std::size_t i) const { return rows_[i]; }
  const std::vector<SparseRow> &row_data() const { return rows_; }

  // Appends a row; the entries are sorted, merged and stripped of zeros.
  void append_row(SparseRow row);
  void append_dense_row(const Vector &row);

  Rational at(std::size_t r, std::size_t c) const;
  Vector multiply(const Vector &v) const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

struct RrefResult {
  SparseMatrix matrix;              // zero rows dropped
  std::vector<std::size_t> pivots;  // strictly increasing
};

// Unique reduced row echelon form.
RrefResult rref(const SparseMatrix &m);

std::size_t rank(const SparseMatrix &m);

// RREF-canonical kernel basis: one vector per free column (ascending), with
// that column set to 1 and pivot coordinates back-solved.
std::vector<Vector> nullspace(const SparseMatrix &m);
std::vector<Vector> nullspace_from_rref(const RrefResult &r);

class InconsistentSystem : public Error {
public:
  explicit InconsistentSystem(std::size_t pivot_row)
      : Error(ErrorKind::Inconsistent, "no solution; rref row " + std::to_string(pivot_row) + " reads 0 = 1"),
        row_(pivot_row) {}
  std::size_t row() const noexcept { return row_; }

private:
  std::size_t row_;
};

// Canonical solution with every free variable set to zero. Throws
// InconsistentSystem when m x = rhs has no solution.
Vector solve(const SparseMatrix &m, const Vector &rhs);

// Span utilities over dense coordinate vectors of a common length.
std::size_t rank_of(const std::vector<Vector> &vectors, std::size_t length);
bool in_span(const std::vector<Vector> &basis, const Vector &v, std::size_t length);
bool span_contains(const std::vector<Vector> &outer, const std::vector<Vector> &inner, std::size_t length);
bool same_span(const std::vector<Vector> &a, const std::vector<Vector> &b, std::size_t length);
// RREF rows of the span, as dense vectors.
std::vector<Vector> span_basis(const std::vector<Vector> &vectors, std::size_t length);

} // namespace trialg
