#include "trialg/algebra.hpp"

#include "trialg/sparse_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace trialg {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

void same_algebra(const Element &x, const Element &y) {
  if (x.algebra_id != y.algebra_id || x.coords.size() != y.coords.size()) {
    throw Error(ErrorKind::MixedAlgebras, "operands belong to different algebras");
  }
}

// Accumulates sum_{i,j} x_i y_j table[i*dim+j] into a dense vector.
Vector bilinear_apply(const std::vector<FiniteAlgebra::SparseVec> &table, const Vector &x, const Vector &y) {
  const std::size_t n = x.size();
  Vector out = zero_vector(n);
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) != 0) nx.push_back(i);
    if (sgn(y[i]) != 0) ny.push_back(i);
  }
  Rational w;
  for (auto i : nx) {
    for (auto j : ny) {
      const auto &entries = table[i * n + j];
      if (entries.empty()) continue;
      w = x[i] * y[j];
      for (const auto &[k, c] : entries) out[k] += w * c;
    }
  }
  return out;
}

} // namespace

Element operator+(const Element &x, const Element &y) {
  same_algebra(x, y);
  Element out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
  return out;
}

Element operator-(const Element &x, const Element &y) {
  same_algebra(x, y);
  Element out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= y.coords[i];
  return out;
}

Element operator-(const Element &x) {
  Element out = x;
  for (auto &c : out.coords) c = -c;
  return out;
}

Element operator*(const Rational &s, const Element &x) {
  Element out = x;
  for (auto &c : out.coords) c *= s;
  return out;
}

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> labels, std::vector<StructureConstant> constants, Vector unit)
    : labels_(std::move(labels)), unit_(std::move(unit)), id_(next_algebra_id++) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::BadInput, "algebra dimension must be positive");
  if (unit_.size() != n) throw Error(ErrorKind::BadInput, "unit has " + std::to_string(unit_.size()) + " coordinates, expected " + std::to_string(n));

  std::vector<std::map<std::uint32_t, Rational>> acc(n * n);
  for (auto &c : constants) {
    if (c.i >= n || c.j >= n || c.k >= n) throw Error(ErrorKind::BadInput, "structure constant index out of range");
    acc[c.i * n + c.j][static_cast<std::uint32_t>(c.k)] += c.value;
  }
  products_.resize(n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    for (auto &[k, v] : acc[p]) {
      if (sgn(v) != 0) products_[p].emplace_back(k, v);
    }
  }
  brackets_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::map<std::uint32_t, Rational> b;
      for (const auto &[k, v] : products_[i * n + j]) b[k] += v;
      for (const auto &[k, v] : products_[j * n + i]) b[k] -= v;
      for (auto &[k, v] : b) {
        if (sgn(v) != 0) brackets_[i * n + j].emplace_back(k, v);
      }
    }
  }

  // (b_i b_j) b_l == b_i (b_j b_l)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        Vector lhs = zero_vector(n), rhs = zero_vector(n);
        for (const auto &[k, c] : products_[i * n + j]) {
          for (const auto &[m, d] : products_[k * n + l]) lhs[m] += c * d;
        }
        for (const auto &[k, c] : products_[j * n + l]) {
          for (const auto &[m, d] : products_[i * n + k]) rhs[m] += c * d;
        }
        if (lhs != rhs) {
          throw Error(ErrorKind::NotAssociative, "(" + labels_[i] + "*" + labels_[j] + ")*" + labels_[l] + " != " + labels_[i] + "*(" + labels_[j] + "*" + labels_[l] + ")");
        }
      }
    }
  }

  const Element u = this->unit();
  for (std::size_t i = 0; i < n; ++i) {
    const Element b = basis(i);
    if (multiply(u, b) != b || multiply(b, u) != b) {
      throw Error(ErrorKind::BadUnit, "unit does not act as identity on " + labels_[i]);
    }
  }
}

Element FiniteAlgebra::element(Vector coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::BadInput, "coordinate vector has wrong length");
  return Element{id_, std::move(coords)};
}

Element FiniteAlgebra::zero() const { return Element{id_, zero_vector(dim())}; }

Element FiniteAlgebra::unit() const { return Element{id_, unit_}; }

Element FiniteAlgebra::basis(std::size_t i) const {
  Element e = zero();
  e.coords.at(i) = 1;
  return e;
}

std::vector<StructureConstant> FiniteAlgebra::structure() const {
  std::vector<StructureConstant> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto &[k, v] : products_[i * n + j]) out.push_back({i, j, k, v});
    }
  }
  return out;
}

void FiniteAlgebra::check_member(const Element &x) const {
  if (x.algebra_id != id_ || x.coords.size() != dim()) {
    throw Error(ErrorKind::MixedAlgebras, "element does not belong to this algebra");
  }
}

Element FiniteAlgebra::multiply(const Element &x, const Element &y) const {
  check_member(x);
  check_member(y);
  return Element{id_, bilinear_apply(products_, x.coords, y.coords)};
}

Element FiniteAlgebra::bracket(const Element &x, const Element &y) const {
  check_member(x);
  check_member(y);
  return Element{id_, bilinear_apply(brackets_, x.coords, y.coords)};
}

bool FiniteAlgebra::is_commutative() const {
  return std::all_of(brackets_.begin(), brackets_.end(), [](const SparseVec &v) { return v.empty(); });
}

bool FiniteAlgebra::commute(const Element &x, const Element &y) const { return bracket(x, y).is_zero(); }

bool FiniteAlgebra::is_central(const Element &z) const {
  check_member(z);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!commute(z, basis(i))) return false;
  }
  return true;
}

std::vector<Element> FiniteAlgebra::centralizer_in(const std::vector<Element> &space, const std::vector<Element> &against) const {
  const std::size_t n = dim();
  // Unknowns: coefficients c_s of v = sum c_s space_s. Rows: (w, output coordinate).
  SparseMatrix m(0, space.size());
  for (const auto &w : against) {
    std::vector<Vector> cols;
    cols.reserve(space.size());
    for (const auto &s : space) cols.push_back(bracket(s, w).coords);
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(space.size());
      for (std::size_t s = 0; s < space.size(); ++s) row[s] = cols[s][k];
      m.append_dense_row(row);
    }
  }
  std::vector<Element> out;
  for (const auto &c : nullspace(m)) {
    Element v = zero();
    for (std::size_t s = 0; s < space.size(); ++s) {
      if (sgn(c[s]) != 0) v = v + c[s] * space[s];
    }
    out.push_back(std::move(v));
  }
  return span_of(*this, out);
}

std::vector<Element> FiniteAlgebra::center_basis() const {
  std::vector<Element> all;
  for (std::size_t i = 0; i < dim(); ++i) all.push_back(basis(i));
  return centralizer_in(all, all);
}

bool is_commutative_on(const FiniteAlgebra &alg, const std::vector<Element> &space) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (!alg.commute(space[i], space[j])) return false;
    }
  }
  return true;
}

std::vector<Vector> coords_of(const std::vector<Element> &elements) {
  std::vector<Vector> out;
  out.reserve(elements.size());
  for (const auto &e : elements) out.push_back(e.coords);
  return out;
}

std::vector<Element> span_of(const FiniteAlgebra &alg, const std::vector<Element> &elements) {
  std::vector<Element> out;
  for (auto &row : span_basis(coords_of(elements), alg.dim())) out.push_back(alg.element(std::move(row)));
  return out;
}

std::string format_element(const FiniteAlgebra &alg, const Element &x) {
  std::string out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    const auto &c = x.coords[i];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += sgn(c) > 0 ? "+" : "";
    if (c == 1) {
      out += alg.labels()[i];
    } else if (c == -1) {
      out += "-" + alg.labels()[i];
    } else {
      out += to_string(c) + "*" + alg.labels()[i];
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace trialg
