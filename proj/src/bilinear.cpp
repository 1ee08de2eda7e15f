#include "trialg/bilinear.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace trialg {

std::string_view law_name(MapLaw law) {
  switch (law) {
  case MapLaw::LieBider: return "lie-bider";
  case MapLaw::AssocBider: return "assoc-bider";
  case MapLaw::LieDerivFirstArg: return "lie-deriv-1";
  case MapLaw::LieDerivSecondArg: return "lie-deriv-2";
  }
  return "unknown";
}

std::optional<MapLaw> parse_law(std::string_view name) {
  for (auto law : kAllLaws) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- BilinearMap

namespace {

void check_same(const BilinearMap &a, const BilinearMap &b) {
  if (a.algebra_id() != b.algebra_id() || a.dim() != b.dim()) {
    throw Error(ErrorKind::MixedAlgebras, "bilinear maps over different algebras");
  }
}

BilinearMap::SparseVec to_sparse(const Vector &v) {
  BilinearMap::SparseVec out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) out.emplace_back(static_cast<std::uint32_t>(k), v[k]);
  }
  return out;
}

BilinearMap::SparseVec combine(const BilinearMap::SparseVec &a, const Rational &s, const BilinearMap::SparseVec &b) {
  std::map<std::uint32_t, Rational> acc;
  for (const auto &[k, v] : a) acc[k] += v;
  for (const auto &[k, v] : b) acc[k] += s * v;
  BilinearMap::SparseVec out;
  for (auto &[k, v] : acc) {
    if (sgn(v) != 0) out.emplace_back(k, v);
  }
  return out;
}

} // namespace

BilinearMap::BilinearMap(const FiniteAlgebra &alg) : dim_(alg.dim()), algebra_id_(alg.id()), values_(alg.dim() * alg.dim()) {}

BilinearMap BilinearMap::from_flat(const FiniteAlgebra &alg, const Vector &flat) {
  const std::size_t d = alg.dim();
  if (flat.size() != d * d * d) throw Error(ErrorKind::BadInput, "coefficient vector has wrong length");
  BilinearMap phi(alg);
  for (std::size_t p = 0; p < d * d; ++p) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto &v = flat[p * d + k];
      if (sgn(v) != 0) phi.values_[p].emplace_back(static_cast<std::uint32_t>(k), v);
    }
  }
  return phi;
}

BilinearMap BilinearMap::from_values(const FiniteAlgebra &alg, const std::vector<Element> &values) {
  const std::size_t d = alg.dim();
  if (values.size() != d * d) throw Error(ErrorKind::BadInput, "need dim^2 values");
  BilinearMap phi(alg);
  for (std::size_t p = 0; p < d * d; ++p) {
    alg.check_member(values[p]);
    phi.values_[p] = to_sparse(values[p].coords);
  }
  return phi;
}

Element BilinearMap::value(const FiniteAlgebra &alg, std::size_t i, std::size_t j) const {
  Element out = alg.zero();
  for (const auto &[k, v] : on_basis(i, j)) out.coords[k] = v;
  return out;
}

Element BilinearMap::apply(const FiniteAlgebra &alg, const Element &x, const Element &y) const {
  alg.check_member(x);
  alg.check_member(y);
  if (alg.id() != algebra_id_) throw Error(ErrorKind::MixedAlgebras, "map is defined on another algebra");
  Element out = alg.zero();
  Rational w;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y.coords[j]) == 0) continue;
      const auto &vals = values_[i * dim_ + j];
      if (vals.empty()) continue;
      w = x.coords[i] * y.coords[j];
      for (const auto &[k, v] : vals) out.coords[k] += w * v;
    }
  }
  return out;
}

Rational BilinearMap::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto &[kk, v] : on_basis(i, j)) {
    if (kk == k) return v;
  }
  return 0;
}

void BilinearMap::set(std::size_t i, std::size_t j, std::size_t k, const Rational &v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::BadInput, "coefficient index out of range");
  auto &vals = values_[i * dim_ + j];
  std::erase_if(vals, [k](const auto &e) { return e.first == k; });
  if (sgn(v) != 0) {
    vals.emplace_back(static_cast<std::uint32_t>(k), v);
    std::sort(vals.begin(), vals.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  }
}

Vector BilinearMap::flatten() const {
  Vector out = zero_vector(dim_ * dim_ * dim_);
  for (std::size_t p = 0; p < values_.size(); ++p) {
    for (const auto &[k, v] : values_[p]) out[p * dim_ + k] = v;
  }
  return out;
}

std::vector<MapCoefficient> BilinearMap::coefficients() const {
  std::vector<MapCoefficient> out;
  for (std::size_t p = 0; p < values_.size(); ++p) {
    for (const auto &[k, v] : values_[p]) out.push_back({p / dim_, p % dim_, k, v});
  }
  return out;
}

bool BilinearMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const SparseVec &v) { return v.empty(); });
}

BilinearMap operator+(const BilinearMap &a, const BilinearMap &b) {
  check_same(a, b);
  BilinearMap out = a;
  for (std::size_t p = 0; p < out.values_.size(); ++p) out.values_[p] = combine(a.values_[p], 1, b.values_[p]);
  return out;
}

BilinearMap operator-(const BilinearMap &a, const BilinearMap &b) {
  check_same(a, b);
  BilinearMap out = a;
  for (std::size_t p = 0; p < out.values_.size(); ++p) out.values_[p] = combine(a.values_[p], -1, b.values_[p]);
  return out;
}

BilinearMap operator*(const Rational &s, const BilinearMap &a) {
  BilinearMap out = a;
  if (sgn(s) == 0) {
    for (auto &v : out.values_) v.clear();
    return out;
  }
  for (auto &vals : out.values_) {
    for (auto &e : vals) e.second *= s;
  }
  return out;
}

// ---------------------------------------------------------------- constraints

namespace {

// Which identities a law contributes and which table (bracket or product)
// they are written in.
struct LawShape {
  bool first_slot;
  bool second_slot;
  bool associative;
};

LawShape shape_of(MapLaw law) {
  switch (law) {
  case MapLaw::LieBider: return {true, true, false};
  case MapLaw::AssocBider: return {true, true, true};
  case MapLaw::LieDerivFirstArg: return {true, false, false};
  case MapLaw::LieDerivSecondArg: return {false, true, false};
  }
  return {false, false, false};
}

} // namespace

SparseMatrix constraint_matrix(const FiniteAlgebra &alg, MapLaw law) {
  const std::size_t d = alg.dim();
  const LawShape shape = shape_of(law);
  auto op = [&](std::size_t i, std::size_t j) -> const FiniteAlgebra::SparseVec & {
    return shape.associative ? alg.product(i, j) : alg.basis_bracket(i, j);
  };
  auto unknown = [d](std::size_t i, std::size_t j, std::size_t k) { return static_cast<std::uint32_t>((i * d + j) * d + k); };

  SparseMatrix m(0, d * d * d);
  std::vector<SparseRow> rows(d);
  auto flush = [&] {
    for (auto &r : rows) {
      m.append_row(std::move(r));
      r.clear();
    }
  };

  // Identity 1 (x, y, z) = (b_a, b_b, b_c):
  //   phi(x op z, y) - phi(x, y) op z - x op phi(z, y)
  if (shape.first_slot) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) {
          for (const auto &[s, w] : op(a, c)) {
            for (std::size_t o = 0; o < d; ++o) rows[o].push_back({unknown(s, b, o), w});
          }
          for (std::size_t k = 0; k < d; ++k) {
            for (const auto &[o, w] : op(k, c)) rows[o].push_back({unknown(a, b, k), -w});
            for (const auto &[o, w] : op(a, k)) rows[o].push_back({unknown(c, b, k), -w});
          }
          flush();
        }
      }
    }
  }
  // Identity 2: phi(x, y op z) - phi(x, y) op z - y op phi(x, z)
  if (shape.second_slot) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < d; ++c) {
          for (const auto &[s, w] : op(b, c)) {
            for (std::size_t o = 0; o < d; ++o) rows[o].push_back({unknown(a, s, o), w});
          }
          for (std::size_t k = 0; k < d; ++k) {
            for (const auto &[o, w] : op(k, c)) rows[o].push_back({unknown(a, b, k), -w});
            for (const auto &[o, w] : op(b, k)) rows[o].push_back({unknown(a, c, k), -w});
          }
          flush();
        }
      }
    }
  }
  return m;
}

SolutionSpace solve_space_detailed(const FiniteAlgebra &alg, MapLaw law) {
  const auto m = constraint_matrix(alg, law);
  const auto red = rref(m);
  SolutionSpace out;
  out.rows = m.rows();
  out.unknowns = m.cols();
  out.rank = red.pivots.size();
  for (const auto &v : nullspace_from_rref(red)) out.basis.push_back(BilinearMap::from_flat(alg, v));
  return out;
}

std::vector<BilinearMap> solve_space(const FiniteAlgebra &alg, MapLaw law) { return solve_space_detailed(alg, law).basis; }

// ---------------------------------------------------------------- constructors

BilinearMap make_inner(const TriangularAlgebra &t, const Element &lambda) {
  const auto &alg = t.algebra();
  if (!alg.is_central(lambda)) throw Error(ErrorKind::NotCentral, "lambda is not central");
  const std::size_t d = alg.dim();
  std::vector<Element> values;
  values.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) values.push_back(alg.multiply(lambda, alg.bracket(alg.basis(i), alg.basis(j))));
  }
  return BilinearMap::from_values(alg, values);
}

BilinearMap make_extremal(const TriangularAlgebra &t, const Element &r) {
  const auto &alg = t.algebra();
  alg.check_member(r);
  const std::size_t d = alg.dim();
  std::vector<Element> inner;
  for (std::size_t j = 0; j < d; ++j) inner.push_back(alg.bracket(alg.basis(j), r));
  std::vector<Element> values;
  values.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) values.push_back(alg.bracket(alg.basis(i), inner[j]));
  }
  return BilinearMap::from_values(alg, values);
}

BilinearMap make_central(const TriangularAlgebra &t, const Vector &g, const Vector &h, const Element &z) {
  const auto &alg = t.algebra();
  const std::size_t d = alg.dim();
  if (g.size() != d || h.size() != d) throw Error(ErrorKind::BadInput, "functional has wrong length");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational gv = 0, hv = 0;
      for (const auto &[k, w] : alg.basis_bracket(i, j)) {
        gv += g[k] * w;
        hv += h[k] * w;
      }
      if (sgn(gv) != 0 || sgn(hv) != 0) {
        throw Error(ErrorKind::NotVanishing, std::string(sgn(gv) != 0 ? "g" : "h") + " is nonzero on [" + alg.labels()[i] + "," + alg.labels()[j] + "]");
      }
    }
  }
  if (!alg.is_central(z)) throw Error(ErrorKind::NotCentral, "z is not central");
  BilinearMap phi(alg);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(g[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(h[j]) == 0) continue;
      const Rational w = g[i] * h[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (sgn(z.coords[k]) != 0) phi.set(i, j, k, w * z.coords[k]);
      }
    }
  }
  return phi;
}

std::vector<Vector> commutator_annihilators(const FiniteAlgebra &alg) {
  const std::size_t d = alg.dim();
  SparseMatrix m(0, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      SparseRow row;
      for (const auto &[k, w] : alg.basis_bracket(i, j)) row.push_back({k, w});
      m.append_row(std::move(row));
    }
  }
  return nullspace(m);
}

std::vector<BilinearMap> admissible_central_maps(const TriangularAlgebra &t) {
  const auto funcs = commutator_annihilators(t.algebra());
  std::vector<BilinearMap> out;
  for (const auto &z : t.center()) {
    for (const auto &g : funcs) {
      for (const auto &h : funcs) out.push_back(make_central(t, g, h, z));
    }
  }
  return out;
}

// ---------------------------------------------------------------- residuals

std::pair<Element, Element> law_residual(const FiniteAlgebra &alg, const BilinearMap &phi, MapLaw law, const Triple &tr) {
  const LawShape shape = shape_of(law);
  auto op = [&](const Element &u, const Element &v) { return shape.associative ? alg.multiply(u, v) : alg.bracket(u, v); };
  const auto &[x, y, z] = tr;
  Element first = alg.zero(), second = alg.zero();
  const Element phi_xy = phi.apply(alg, x, y);
  if (shape.first_slot) {
    first = phi.apply(alg, op(x, z), y) - op(phi_xy, z) - op(x, phi.apply(alg, z, y));
  }
  if (shape.second_slot) {
    second = phi.apply(alg, x, op(y, z)) - op(phi_xy, z) - op(y, phi.apply(alg, x, z));
  }
  return {first, second};
}

std::optional<std::array<std::size_t, 3>> law_violation(const FiniteAlgebra &alg, const BilinearMap &phi, MapLaw law) {
  const std::size_t d = alg.dim();
  std::vector<Element> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(alg.basis(i));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        const auto [r1, r2] = law_residual(alg, phi, law, {basis[a], basis[b], basis[c]});
        if (!r1.is_zero() || !r2.is_zero()) return std::array<std::size_t, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

Element four_term_residual(const FiniteAlgebra &alg, const BilinearMap &phi, const Element &x, const Element &y,
                           const Element &a, const Element &b, FourTermForm form) {
  auto br = [&](const Element &u, const Element &v) { return alg.bracket(u, v); };
  const Element third = br(phi.apply(alg, y, a), br(x, b));
  const Element rest = br(phi.apply(alg, x, a), br(b, y)) + br(phi.apply(alg, x, b), br(y, a)) - br(phi.apply(alg, y, b), br(x, a));
  return form == FourTermForm::AsStated ? rest - third : rest + third;
}

FourTermSweep four_term_sweep(const FiniteAlgebra &alg, const std::vector<BilinearMap> &maps, std::size_t samples,
                              std::uint64_t seed, std::size_t exhaustive_limit, FourTermForm form) {
  const std::size_t n = alg.dim();
  FourTermSweep out;
  out.maps = maps.size();
  std::vector<std::array<std::size_t, 4>> quads;
  const std::size_t total = n * n * n * n;
  if (total <= exhaustive_limit) {
    out.exhaustive = true;
    for (std::size_t q = 0; q < total; ++q) quads.push_back({q / (n * n * n), q / (n * n) % n, q / n % n, q % n});
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      std::array<std::size_t, 4> q;
      for (auto &v : q) v = rng() % n;
      quads.push_back(q);
    }
  }
  out.quadruples = quads.size();
  for (std::size_t m = 0; m < maps.size(); ++m) {
    for (const auto &q : quads) {
      if (four_term_residual(alg, maps[m], alg.basis(q[0]), alg.basis(q[1]), alg.basis(q[2]), alg.basis(q[3]), form).is_zero()) continue;
      if (out.failures++ == 0) {
        out.witness = q;
        out.witness_map = m;
      }
    }
  }
  return out;
}

std::vector<Vector> flatten_all(const std::vector<BilinearMap> &maps) {
  std::vector<Vector> out;
  out.reserve(maps.size());
  for (const auto &m : maps) out.push_back(m.flatten());
  return out;
}

bool map_in_span(const std::vector<BilinearMap> &basis, const BilinearMap &phi) {
  return in_span(flatten_all(basis), phi.flatten(), phi.dim() * phi.dim() * phi.dim());
}

} // namespace trialg
