#pragma once

#include "trialg/algebra.hpp"
#include "trialg/sparse_matrix.hpp"
#include "trialg/triangular.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace trialg {

enum class MapLaw { LieBider, AssocBider, LieDerivFirstArg, LieDerivSecondArg };

inline constexpr MapLaw kAllLaws[] = {MapLaw::LieBider, MapLaw::AssocBider, MapLaw::LieDerivFirstArg, MapLaw::LieDerivSecondArg};

// CLI spelling: lie-bider, assoc-bider, lie-deriv-1, lie-deriv-2.
std::string_view law_name(MapLaw law);
std::optional<MapLaw> parse_law(std::string_view name);

struct MapCoefficient {
  std::size_t i, j, k;
  Rational value;
};

// Bilinear map phi with phi(b_i, b_j) = sum_k t[i][j][k] b_k.
class BilinearMap {
public:
  using SparseVec = FiniteAlgebra::SparseVec;

  BilinearMap() = default;
  explicit BilinearMap(const FiniteAlgebra &alg);  // zero map

  // From the flattened (i, j, k) lexicographic coefficient vector.
  static BilinearMap from_flat(const FiniteAlgebra &alg, const Vector &flat);
  // From phi(b_i, b_j) values; values[i * dim + j].
  static BilinearMap from_values(const FiniteAlgebra &alg, const std::vector<Element> &values);

  std::size_t dim() const { return dim_; }
  std::uint64_t algebra_id() const { return algebra_id_; }

  const SparseVec &on_basis(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Element value(const FiniteAlgebra &alg, std::size_t i, std::size_t j) const;
  Element apply(const FiniteAlgebra &alg, const Element &x, const Element &y) const;

  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational &v);

  Vector flatten() const;
  // Nonzero coefficients sorted by (i, j, k).
  std::vector<MapCoefficient> coefficients() const;
  bool is_zero() const;

  friend BilinearMap operator+(const BilinearMap &a, const BilinearMap &b);
  friend BilinearMap operator-(const BilinearMap &a, const BilinearMap &b);
  friend BilinearMap operator*(const Rational &s, const BilinearMap &a);
  friend bool operator==(const BilinearMap &, const BilinearMap &) = default;

private:
  std::size_t dim_ = 0;
  std::uint64_t algebra_id_ = 0;
  std::vector<SparseVec> values_;
};

// Linear constraints on the dim^3 unknowns t[i][j][k] (flattened (i, j, k)
// lexicographically) whose kernel is exactly the maps obeying `law`. Rows are
// ordered by identity (first slot, then second slot), then basis triple
// (x, y, z) lexicographically, then output coordinate.
SparseMatrix constraint_matrix(const FiniteAlgebra &alg, MapLaw law);

struct SolutionSpace {
  std::vector<BilinearMap> basis;  // RREF-canonical kernel basis
  std::size_t rows = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

SolutionSpace solve_space_detailed(const FiniteAlgebra &alg, MapLaw law);
std::vector<BilinearMap> solve_space(const FiniteAlgebra &alg, MapLaw law);

// (x, y) -> lambda [x, y]. Throws Error{NotCentral}.
BilinearMap make_inner(const TriangularAlgebra &t, const Element &lambda);
// (x, y) -> [x, [y, r]].
BilinearMap make_extremal(const TriangularAlgebra &t, const Element &r);
// (x, y) -> g(x) h(y) z, with g, h coordinate functionals. Throws
// Error{NotVanishing} if g or h is nonzero on some [b_i, b_j], and
// Error{NotCentral} if z is not central.
BilinearMap make_central(const TriangularAlgebra &t, const Vector &g, const Vector &h, const Element &z);

// Basis of the linear functionals vanishing on every [b_i, b_j].
std::vector<Vector> commutator_annihilators(const FiniteAlgebra &alg);

// Spanning set for the admissible central maps g(x) h(y) z.
std::vector<BilinearMap> admissible_central_maps(const TriangularAlgebra &t);

struct Triple {
  Element x, y, z;
};

// LHS - RHS of the law's first-slot and second-slot identities at (x, y, z).
// Single-slot laws report zero for the slot they do not constrain.
std::pair<Element, Element> law_residual(const FiniteAlgebra &alg, const BilinearMap &phi, MapLaw law, const Triple &triple);

// First basis triple (x, y, z) where a residual is nonzero, if any.
std::optional<std::array<std::size_t, 3>> law_violation(const FiniteAlgebra &alg, const BilinearMap &phi, MapLaw law);

// Which sign the [phi(y,a),[x,b]] term carries. Expanding phi([x,y],[a,b])
// through either argument and applying the Jacobi identity gives
//   [phi(x,a),[b,y]] + [phi(x,b),[y,a]] + [phi(y,a),[x,b]] - [phi(y,b),[x,a]] = 0,
// AsStated is the commonly quoted form with "-" on the third term; it fails
// already for phi = [.,.] on T3 at (E11, E22, E23, E12).
enum class FourTermForm { AsStated, Corrected };

// AsStated: [phi(x,a),[b,y]] + [phi(x,b),[y,a]] - [phi(y,a),[x,b]] - [phi(y,b),[x,a]]
Element four_term_residual(const FiniteAlgebra &alg, const BilinearMap &phi, const Element &x, const Element &y,
                           const Element &a, const Element &b, FourTermForm form = FourTermForm::AsStated);

struct FourTermSweep {
  bool exhaustive = false;
  std::size_t quadruples = 0;  // per map
  std::size_t maps = 0;
  std::size_t failures = 0;
  std::optional<std::array<std::size_t, 4>> witness;  // (x, y, a, b) basis indices
  std::size_t witness_map = 0;
};

// four_term_residual over basis quadruples for every map: all dim^4 of them
// when that is at most exhaustive_limit, otherwise `samples` quadruples drawn
// from mt19937_64(seed) as raw output mod dim.
FourTermSweep four_term_sweep(const FiniteAlgebra &alg, const std::vector<BilinearMap> &maps, std::size_t samples,
                              std::uint64_t seed, std::size_t exhaustive_limit, FourTermForm form = FourTermForm::AsStated);

std::vector<Vector> flatten_all(const std::vector<BilinearMap> &maps);
bool map_in_span(const std::vector<BilinearMap> &basis, const BilinearMap &phi);

} // namespace trialg
