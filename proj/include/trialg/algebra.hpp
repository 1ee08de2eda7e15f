#pragma once

#include "trialg/error.hpp"
#include "trialg/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trialg {

// Element of a FiniteAlgebra: plain coordinates in the algebra's basis plus
// the identity of the algebra it belongs to.
struct Element {
  std::uint64_t algebra_id = 0;
  Vector coords;

  bool is_zero() const { return trialg::is_zero(coords); }
  std::size_t dim() const { return coords.size(); }

  friend bool operator==(const Element &, const Element &) = default;
};

Element operator+(const Element &x, const Element &y);
Element operator-(const Element &x, const Element &y);
Element operator-(const Element &x);
Element operator*(const Rational &s, const Element &x);

struct StructureConstant {
  std::size_t i, j, k;
  Rational value;

  friend bool operator==(const StructureConstant &, const StructureConstant &) = default;
};

// Associative unital algebra over Q given by structure constants
// b_i * b_j = sum_k c[i][j][k] b_k. Immutable once constructed.
class FiniteAlgebra {
public:
  using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

  // Validates indices, associativity on all basis triples and the unit.
  // Throws Error{BadInput | NotAssociative | BadUnit}.
  FiniteAlgebra(std::vector<std::string> labels, std::vector<StructureConstant> constants, Vector unit);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  std::uint64_t id() const { return id_; }

  Element element(Vector coords) const;
  Element zero() const;
  Element unit() const;
  Element basis(std::size_t i) const;

  // b_i * b_j as a sparse coordinate list.
  const SparseVec &product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  // b_i b_j - b_j b_i, cached.
  const SparseVec &basis_bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
  // Sorted by (i, j, k).
  std::vector<StructureConstant> structure() const;

  Element multiply(const Element &x, const Element &y) const;
  Element bracket(const Element &x, const Element &y) const;

  bool is_commutative() const;
  bool commute(const Element &x, const Element &y) const;
  bool is_central(const Element &z) const;

  // RREF-canonical basis of the center, from the kernel of the stacked
  // adjoint-action matrix.
  std::vector<Element> center_basis() const;

  // Basis of {v in span(space) : [v, w] = 0 for all w in against}, as
  // elements in RREF-canonical coordinate form.
  std::vector<Element> centralizer_in(const std::vector<Element> &space, const std::vector<Element> &against) const;

  void check_member(const Element &x) const;

private:
  std::vector<std::string> labels_;
  std::vector<SparseVec> products_;
  std::vector<SparseVec> brackets_;
  Vector unit_;
  std::uint64_t id_;
};

// Whether every pair in `space` commutes.
bool is_commutative_on(const FiniteAlgebra &alg, const std::vector<Element> &space);

// Canonical basis (RREF of coordinate rows) of span(elements).
std::vector<Element> span_of(const FiniteAlgebra &alg, const std::vector<Element> &elements);

// Human-readable linear combination of basis labels, e.g. "E11-1/2*E13".
std::string format_element(const FiniteAlgebra &alg, const Element &x);

// Coordinate rows of elements.
std::vector<Vector> coords_of(const std::vector<Element> &elements);

} // namespace trialg
