#pragma once

#include "trialg/algebra.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace trialg {

// Finite poset on {0..size-1}, stored as its reflexive-transitive closure.
class Poset {
public:
  // Closes `relations` (pairs x <= y) reflexively and transitively. Throws
  // Error{BadPoset} if an index is out of range or the closure has a cycle.
  static Poset from_relations(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>> &relations);

  std::size_t size() const { return size_; }
  bool leq(std::size_t x, std::size_t y) const { return rel_[x * size_ + y] != 0; }
  // Comparability graph connected.
  bool is_connected() const;
  bool is_downset(const std::vector<std::size_t> &s) const;

private:
  std::size_t size_ = 0;
  std::vector<char> rel_;
};

// A subspace of the algebra given by an RREF basis; coordinates relative to
// that basis are read off at the pivot columns.
struct Subspace {
  std::vector<Element> basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.size(); }
  Vector coords(const Element &x) const;
};

Subspace make_subspace(const FiniteAlgebra &alg, const std::vector<Element> &spanning);

struct PeirceParts {
  Element a;  // exe
  Element m;  // exf
  Element b;  // fxf
};

// Linear endomorphism of the corner T12 in the coordinates of its basis:
// h(m_s) = sum_t entries[t * dim + s] m_t.
struct BimoduleMap {
  std::size_t dim = 0;
  Vector entries;

  Vector apply(const Vector &m) const;
  static BimoduleMap identity(std::size_t dim);
};

enum class Cond4 { Holds, Inconclusive, Violated };

std::string_view cond4_name(Cond4 c);

struct HypothesisReport {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  Cond4 cond_iv = Cond4::Inconclusive;

  struct Details {
    std::size_t dim_center = 0;
    std::size_t dim_center_a = 0;     // Z(A)
    std::size_t dim_center_b = 0;     // Z(B)
    std::size_t dim_projection_a = 0; // pi_A(Z(T))
    std::size_t dim_projection_b = 0; // pi_B(Z(T))
    bool a_commutative = false;
    bool b_commutative = false;
    std::size_t dim_hom = 0;
    std::size_t dim_standard = 0;
    std::size_t cond_iv_trials = 0;
    std::string cond_iv_evidence;
  } details;

  bool all_hold() const { return cond_i && cond_ii && cond_iii && cond_iv == Cond4::Holds; }
};

// FiniteAlgebra with an idempotent e splitting it as eTe + eTf + fTf, f = 1-e,
// with fTe = 0 and eTf a nonzero faithful (eTe, fTf)-bimodule. Center, corner
// centers and their projections are computed at construction.
class TriangularAlgebra {
public:
  // Throws Error{NotIdempotent | NotTriangular | ZeroBimodule | NotFaithful | MixedAlgebras}.
  TriangularAlgebra(std::shared_ptr<const FiniteAlgebra> alg, Element e);

  const FiniteAlgebra &algebra() const { return *alg_; }
  std::shared_ptr<const FiniteAlgebra> algebra_ptr() const { return alg_; }
  std::size_t dim() const { return alg_->dim(); }

  const Element &e() const { return e_; }
  const Element &f() const { return f_; }

  const Subspace &corner_a() const { return t11_; }
  const Subspace &corner_m() const { return t12_; }
  const Subspace &corner_b() const { return t22_; }

  const std::vector<Element> &center() const { return center_; }
  const std::vector<Element> &center_a() const { return center_a_; }
  const std::vector<Element> &center_b() const { return center_b_; }
  const std::vector<Element> &projection_a() const { return proj_a_; }
  const std::vector<Element> &projection_b() const { return proj_b_; }

  PeirceParts peirce(const Element &x) const;

  // The unique b in fTf with a*m = m*b for all m in eTf, where a + b is
  // central. Throws Error{NotInProjection}.
  Element tau(const Element &a) const;
  // Inverse direction: the a in eTe with a*m = m*b, a + b central.
  Element tau_inverse(const Element &b) const;

  std::vector<BimoduleMap> bimodule_hom_basis() const;
  // Spanning set of m -> a0 m + m b0 with a0 in Z(A), b0 in Z(B).
  std::vector<BimoduleMap> standard_form_maps() const;
  bool standard_form_check() const;

  HypothesisReport hypothesis_report() const;

private:
  BimoduleMap left_action(const Element &a) const;
  BimoduleMap right_action(const Element &b) const;

  std::shared_ptr<const FiniteAlgebra> alg_;
  Element e_, f_;
  Subspace t11_, t12_, t22_;
  std::vector<Element> center_, center_a_, center_b_, proj_a_, proj_b_;
};

// Algebra with basis {E_pq : allowed[p*n+q]} (row-major) and matrix-unit
// products. The pattern must be reflexive and transitive.
std::shared_ptr<const FiniteAlgebra> pattern_algebra(std::size_t n, const std::vector<char> &allowed);
std::shared_ptr<const FiniteAlgebra> full_matrix_algebra(std::size_t n);
// Block upper triangular pattern algebra without a triangular split (also
// accepts a single block).
std::shared_ptr<const FiniteAlgebra> block_pattern_algebra(const std::vector<std::size_t> &dims);

// Basis index of E_pq in a pattern algebra, or -1.
long pattern_index(std::size_t n, const std::vector<char> &allowed, std::size_t p, std::size_t q);

// T_n(Q) split after the first k diagonal positions. Throws Error{BadSplit}.
TriangularAlgebra upper_triangular(std::size_t n, std::size_t k);

// Block upper triangular algebra with the given block sizes, e covering the
// first j blocks. Throws Error{SingleBlock | BadSplit | BadInput}.
TriangularAlgebra block_upper_triangular(const std::vector<std::size_t> &dims, std::size_t j);

// Incidence algebra of a connected poset with e = sum of eps_xx over the
// downset. Throws Error{Disconnected | BadSplit}.
TriangularAlgebra incidence_algebra(const Poset &p, const std::vector<std::size_t> &downset);

} // namespace trialg
