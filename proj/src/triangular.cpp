#include "trialg/triangular.hpp"

#include "trialg/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace trialg {

// ---------------------------------------------------------------- Poset

Poset Poset::from_relations(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>> &relations) {
  if (size == 0) throw Error(ErrorKind::BadPoset, "poset must be nonempty");
  Poset p;
  p.size_ = size;
  p.rel_.assign(size * size, 0);
  for (std::size_t x = 0; x < size; ++x) p.rel_[x * size + x] = 1;
  for (const auto &[x, y] : relations) {
    if (x >= size || y >= size) throw Error(ErrorKind::BadPoset, "relation element out of range");
    p.rel_[x * size + y] = 1;
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!p.rel_[i * size + k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (p.rel_[k * size + j]) p.rel_[i * size + j] = 1;
      }
    }
  }
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = x + 1; y < size; ++y) {
      if (p.leq(x, y) && p.leq(y, x)) {
        throw Error(ErrorKind::BadPoset, "relations are not antisymmetric (" + std::to_string(x + 1) + " and " + std::to_string(y + 1) + ")");
      }
    }
  }
  return p;
}

bool Poset::is_connected() const {
  std::vector<std::size_t> parent(size_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) {
      if (leq(x, y)) parent[find(x)] = find(y);
    }
  }
  for (std::size_t x = 1; x < size_; ++x) {
    if (find(x) != find(0)) return false;
  }
  return true;
}

bool Poset::is_downset(const std::vector<std::size_t> &s) const {
  std::vector<char> in(size_, 0);
  for (auto x : s) {
    if (x >= size_) return false;
    in[x] = 1;
  }
  for (std::size_t y = 0; y < size_; ++y) {
    if (!in[y]) continue;
    for (std::size_t x = 0; x < size_; ++x) {
      if (leq(x, y) && !in[x]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- helpers

Vector Subspace::coords(const Element &x) const {
  Vector c(pivots.size());
  for (std::size_t s = 0; s < pivots.size(); ++s) c[s] = x.coords[pivots[s]];
  return c;
}

Subspace make_subspace(const FiniteAlgebra &alg, const std::vector<Element> &spanning) {
  Subspace sub;
  sub.basis = span_of(alg, spanning);
  for (const auto &b : sub.basis) {
    for (std::size_t i = 0; i < b.coords.size(); ++i) {
      if (sgn(b.coords[i]) != 0) {
        sub.pivots.push_back(i);
        break;
      }
    }
  }
  return sub;
}

Vector BimoduleMap::apply(const Vector &m) const {
  Vector out = zero_vector(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    for (std::size_t s = 0; s < dim; ++s) out[t] += entries[t * dim + s] * m[s];
  }
  return out;
}

BimoduleMap BimoduleMap::identity(std::size_t dim) {
  BimoduleMap h{dim, zero_vector(dim * dim)};
  for (std::size_t s = 0; s < dim; ++s) h.entries[s * dim + s] = 1;
  return h;
}

std::string_view cond4_name(Cond4 c) {
  switch (c) {
  case Cond4::Holds: return "holds";
  case Cond4::Inconclusive: return "inconclusive";
  case Cond4::Violated: return "violated";
  }
  return "unknown";
}

namespace {

// Rank of the linear map c -> sum_s c_s f(basis_s), listed as columns.
std::size_t column_rank(const std::vector<Vector> &columns, std::size_t length) {
  return rank_of(columns, length);
}

Element combine(const FiniteAlgebra &alg, const std::vector<Element> &basis, const Vector &c) {
  Element out = alg.zero();
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (sgn(c[s]) != 0) out = out + c[s] * basis[s];
  }
  return out;
}

std::vector<Vector> flatten(const std::vector<BimoduleMap> &maps) {
  std::vector<Vector> out;
  for (const auto &h : maps) out.push_back(h.entries);
  return out;
}

} // namespace

// ---------------------------------------------------------------- TriangularAlgebra

TriangularAlgebra::TriangularAlgebra(std::shared_ptr<const FiniteAlgebra> alg, Element e)
    : alg_(std::move(alg)), e_(std::move(e)) {
  const FiniteAlgebra &A = *alg_;
  A.check_member(e_);
  if (A.multiply(e_, e_) != e_) throw Error(ErrorKind::NotIdempotent, "e*e != e");
  f_ = A.unit() - e_;

  std::vector<Element> ee, ef, ff;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Element b = A.basis(i);
    const Element eb = A.multiply(e_, b), fb = A.multiply(f_, b);
    if (!A.multiply(fb, e_).is_zero()) {
      throw Error(ErrorKind::NotTriangular, "f*" + A.labels()[i] + "*e != 0");
    }
    ee.push_back(A.multiply(eb, e_));
    ef.push_back(A.multiply(eb, f_));
    ff.push_back(A.multiply(fb, f_));
  }
  t11_ = make_subspace(A, ee);
  t12_ = make_subspace(A, ef);
  t22_ = make_subspace(A, ff);
  if (t12_.dim() == 0) throw Error(ErrorKind::ZeroBimodule, "eTf = 0");

  // Faithfulness: a -> (m -> a m) and b -> (m -> m b) are injective.
  {
    std::vector<Vector> left, right;
    for (const auto &a : t11_.basis) {
      Vector col;
      for (const auto &m : t12_.basis) {
        const auto v = A.multiply(a, m).coords;
        col.insert(col.end(), v.begin(), v.end());
      }
      left.push_back(std::move(col));
    }
    for (const auto &b : t22_.basis) {
      Vector col;
      for (const auto &m : t12_.basis) {
        const auto v = A.multiply(m, b).coords;
        col.insert(col.end(), v.begin(), v.end());
      }
      right.push_back(std::move(col));
    }
    const std::size_t len = t12_.dim() * A.dim();
    if (column_rank(left, len) != t11_.dim()) throw Error(ErrorKind::NotFaithful, "eTf is not faithful as a left eTe-module");
    if (column_rank(right, len) != t22_.dim()) throw Error(ErrorKind::NotFaithful, "eTf is not faithful as a right fTf-module");
  }

  center_ = A.center_basis();
  center_a_ = A.centralizer_in(t11_.basis, t11_.basis);
  center_b_ = A.centralizer_in(t22_.basis, t22_.basis);
  std::vector<Element> pa, pb;
  for (const auto &z : center_) {
    const auto parts = peirce(z);
    pa.push_back(parts.a);
    pb.push_back(parts.b);
  }
  proj_a_ = span_of(A, pa);
  proj_b_ = span_of(A, pb);
}

PeirceParts TriangularAlgebra::peirce(const Element &x) const {
  const FiniteAlgebra &A = *alg_;
  const Element ex = A.multiply(e_, x), fx = A.multiply(f_, x);
  return {A.multiply(ex, e_), A.multiply(ex, f_), A.multiply(fx, f_)};
}

Element TriangularAlgebra::tau(const Element &a) const {
  const FiniteAlgebra &A = *alg_;
  A.check_member(a);
  if (peirce(a).a != a) throw Error(ErrorKind::NotInProjection, "argument is not in eTe");
  // Unknown b = sum_t beta_t B_t; equations m_s * b = a * m_s.
  const std::size_t n = A.dim();
  SparseMatrix m(0, t22_.dim());
  Vector rhs;
  for (const auto &ms : t12_.basis) {
    std::vector<Vector> cols;
    for (const auto &bt : t22_.basis) cols.push_back(A.multiply(ms, bt).coords);
    const auto target = A.multiply(a, ms).coords;
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(t22_.dim());
      for (std::size_t t = 0; t < t22_.dim(); ++t) row[t] = cols[t][k];
      m.append_dense_row(row);
      rhs.push_back(target[k]);
    }
  }
  Vector beta;
  try {
    beta = solve(m, rhs);
  } catch (const InconsistentSystem &) {
    throw Error(ErrorKind::NotInProjection, "no b in fTf with a*m = m*b for all m in eTf");
  }
  Element b = combine(A, t22_.basis, beta);
  if (!A.is_central(a + b)) throw Error(ErrorKind::NotInProjection, "a + tau(a) is not central");
  return b;
}

Element TriangularAlgebra::tau_inverse(const Element &b) const {
  const FiniteAlgebra &A = *alg_;
  A.check_member(b);
  if (peirce(b).b != b) throw Error(ErrorKind::NotInProjection, "argument is not in fTf");
  const std::size_t n = A.dim();
  SparseMatrix m(0, t11_.dim());
  Vector rhs;
  for (const auto &ms : t12_.basis) {
    std::vector<Vector> cols;
    for (const auto &as : t11_.basis) cols.push_back(A.multiply(as, ms).coords);
    const auto target = A.multiply(ms, b).coords;
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(t11_.dim());
      for (std::size_t t = 0; t < t11_.dim(); ++t) row[t] = cols[t][k];
      m.append_dense_row(row);
      rhs.push_back(target[k]);
    }
  }
  Vector alpha;
  try {
    alpha = solve(m, rhs);
  } catch (const InconsistentSystem &) {
    throw Error(ErrorKind::NotInProjection, "no a in eTe with a*m = m*b for all m in eTf");
  }
  Element a = combine(A, t11_.basis, alpha);
  if (!A.is_central(a + b)) throw Error(ErrorKind::NotInProjection, "tau^-1(b) + b is not central");
  return a;
}

BimoduleMap TriangularAlgebra::left_action(const Element &a) const {
  const std::size_t d = t12_.dim();
  BimoduleMap h{d, zero_vector(d * d)};
  for (std::size_t s = 0; s < d; ++s) {
    const auto c = t12_.coords(alg_->multiply(a, t12_.basis[s]));
    for (std::size_t t = 0; t < d; ++t) h.entries[t * d + s] = c[t];
  }
  return h;
}

BimoduleMap TriangularAlgebra::right_action(const Element &b) const {
  const std::size_t d = t12_.dim();
  BimoduleMap h{d, zero_vector(d * d)};
  for (std::size_t s = 0; s < d; ++s) {
    const auto c = t12_.coords(alg_->multiply(t12_.basis[s], b));
    for (std::size_t t = 0; t < d; ++t) h.entries[t * d + s] = c[t];
  }
  return h;
}

std::vector<BimoduleMap> TriangularAlgebra::bimodule_hom_basis() const {
  const std::size_t d = t12_.dim();
  std::vector<BimoduleMap> actions;
  for (const auto &a : t11_.basis) actions.push_back(left_action(a));
  for (const auto &b : t22_.basis) actions.push_back(right_action(b));
  // H L - L H = 0 for every action matrix L; unknown H[t][s] at t*d+s.
  SparseMatrix m(0, d * d);
  for (const auto &L : actions) {
    for (std::size_t t = 0; t < d; ++t) {
      for (std::size_t s = 0; s < d; ++s) {
        SparseRow row;
        for (std::size_t u = 0; u < d; ++u) {
          const Rational &lus = L.entries[u * d + s];
          if (sgn(lus) != 0) row.push_back({static_cast<std::uint32_t>(t * d + u), lus});
          const Rational &ltu = L.entries[t * d + u];
          if (sgn(ltu) != 0) row.push_back({static_cast<std::uint32_t>(u * d + s), -ltu});
        }
        m.append_row(std::move(row));
      }
    }
  }
  std::vector<BimoduleMap> out;
  for (auto &v : nullspace(m)) out.push_back(BimoduleMap{d, std::move(v)});
  return out;
}

std::vector<BimoduleMap> TriangularAlgebra::standard_form_maps() const {
  std::vector<BimoduleMap> out;
  for (const auto &a0 : center_a_) out.push_back(left_action(a0));
  for (const auto &b0 : center_b_) out.push_back(right_action(b0));
  return out;
}

bool TriangularAlgebra::standard_form_check() const {
  const std::size_t len = t12_.dim() * t12_.dim();
  return same_span(flatten(bimodule_hom_basis()), flatten(standard_form_maps()), len);
}

HypothesisReport TriangularAlgebra::hypothesis_report() const {
  const FiniteAlgebra &A = *alg_;
  HypothesisReport r;
  auto &d = r.details;
  d.dim_center = center_.size();
  d.dim_center_a = center_a_.size();
  d.dim_center_b = center_b_.size();
  d.dim_projection_a = proj_a_.size();
  d.dim_projection_b = proj_b_.size();
  r.cond_i = same_span(coords_of(proj_a_), coords_of(center_a_), A.dim()) &&
             same_span(coords_of(proj_b_), coords_of(center_b_), A.dim());

  d.a_commutative = is_commutative_on(A, t11_.basis);
  d.b_commutative = is_commutative_on(A, t22_.basis);
  r.cond_ii = !d.a_commutative || !d.b_commutative;

  const auto hom = bimodule_hom_basis();
  const auto standard = standard_form_maps();
  const std::size_t len = t12_.dim() * t12_.dim();
  d.dim_hom = hom.size();
  d.dim_standard = rank_of(flatten(standard), len);
  r.cond_iii = same_span(flatten(hom), flatten(standard), len);

  if (center_a_.size() == 1) {
    r.cond_iv = Cond4::Holds;
    d.cond_iv_evidence = "Z(A) is one-dimensional (scalars)";
  } else {
    // Not finitely decidable in general: sample central elements and test
    // injectivity of left multiplication on A.
    std::mt19937_64 rng(0x7269616cULL);
    r.cond_iv = Cond4::Inconclusive;
    d.cond_iv_evidence = "left multiplication injective for all sampled central elements";
    for (int trial = 0; trial < 32; ++trial) {
      Element alpha = A.zero();
      while (alpha.is_zero()) {
        for (const auto &z : center_a_) {
          const long c = static_cast<long>(rng() % 7) - 3;
          if (c != 0) alpha = alpha + Rational(c) * z;
        }
      }
      ++d.cond_iv_trials;
      std::vector<Vector> cols;
      for (const auto &a : t11_.basis) cols.push_back(A.multiply(alpha, a).coords);
      if (rank_of(cols, A.dim()) != t11_.dim()) {
        r.cond_iv = Cond4::Violated;
        d.cond_iv_evidence = "sampled central element annihilates a nonzero element of A";
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- constructors

long pattern_index(std::size_t n, const std::vector<char> &allowed, std::size_t p, std::size_t q) {
  if (!allowed[p * n + q]) return -1;
  long idx = 0;
  for (std::size_t i = 0; i < p * n + q; ++i) idx += allowed[i] ? 1 : 0;
  return idx;
}

std::shared_ptr<const FiniteAlgebra> pattern_algebra(std::size_t n, const std::vector<char> &allowed) {
  if (allowed.size() != n * n) throw Error(ErrorKind::BadInput, "pattern has wrong size");
  std::vector<long> index(n * n, -1);
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!allowed[p * n + q]) continue;
      index[p * n + q] = static_cast<long>(labels.size());
      labels.push_back(n < 10 ? "E" + std::to_string(p + 1) + std::to_string(q + 1)
                              : "E" + std::to_string(p + 1) + "_" + std::to_string(q + 1));
    }
  }
  std::vector<StructureConstant> sc;
  Vector unit = zero_vector(labels.size());
  for (std::size_t p = 0; p < n; ++p) {
    if (index[p * n + p] < 0) throw Error(ErrorKind::BadInput, "pattern must contain the diagonal");
    unit[index[p * n + p]] = 1;
    for (std::size_t q = 0; q < n; ++q) {
      if (index[p * n + q] < 0) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (index[q * n + r] < 0) continue;
        if (index[p * n + r] < 0) throw Error(ErrorKind::BadInput, "pattern is not transitive");
        sc.push_back({static_cast<std::size_t>(index[p * n + q]), static_cast<std::size_t>(index[q * n + r]),
                      static_cast<std::size_t>(index[p * n + r]), Rational(1)});
      }
    }
  }
  return std::make_shared<const FiniteAlgebra>(std::move(labels), std::move(sc), std::move(unit));
}

std::shared_ptr<const FiniteAlgebra> full_matrix_algebra(std::size_t n) {
  return pattern_algebra(n, std::vector<char>(n * n, 1));
}

namespace {

std::vector<char> block_pattern(const std::vector<std::size_t> &dims, std::vector<std::size_t> &block_of) {
  block_of.clear();
  for (std::size_t b = 0; b < dims.size(); ++b) {
    if (dims[b] == 0) throw Error(ErrorKind::BadInput, "block sizes must be positive");
    block_of.insert(block_of.end(), dims[b], b);
  }
  const std::size_t n = block_of.size();
  std::vector<char> allowed(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) allowed[p * n + q] = block_of[p] <= block_of[q];
  }
  return allowed;
}

TriangularAlgebra split_pattern(std::size_t n, const std::vector<char> &allowed, const std::vector<char> &in_e) {
  auto alg = pattern_algebra(n, allowed);
  Element e = alg->zero();
  for (std::size_t p = 0; p < n; ++p) {
    if (in_e[p]) e.coords[pattern_index(n, allowed, p, p)] = 1;
  }
  return TriangularAlgebra(alg, e);
}

} // namespace

std::shared_ptr<const FiniteAlgebra> block_pattern_algebra(const std::vector<std::size_t> &dims) {
  if (dims.empty()) throw Error(ErrorKind::BadInput, "no blocks given");
  std::vector<std::size_t> block_of;
  const auto allowed = block_pattern(dims, block_of);
  return pattern_algebra(block_of.size(), allowed);
}

TriangularAlgebra upper_triangular(std::size_t n, std::size_t k) {
  if (n < 2) throw Error(ErrorKind::BadSplit, "n must be at least 2, got " + std::to_string(n));
  if (k < 1 || k > n - 1) throw Error(ErrorKind::BadSplit, "split k must satisfy 1 <= k <= n-1, got " + std::to_string(k));
  return block_upper_triangular(std::vector<std::size_t>(n, 1), k);
}

TriangularAlgebra block_upper_triangular(const std::vector<std::size_t> &dims, std::size_t j) {
  if (dims.empty()) throw Error(ErrorKind::BadInput, "no blocks given");
  if (dims.size() == 1) throw Error(ErrorKind::SingleBlock, "a single block is a full matrix algebra, not triangular");
  if (j < 1 || j >= dims.size()) {
    throw Error(ErrorKind::BadSplit, "split j must satisfy 1 <= j < " + std::to_string(dims.size()) + ", got " + std::to_string(j));
  }
  std::vector<std::size_t> block_of;
  const auto allowed = block_pattern(dims, block_of);
  const std::size_t n = block_of.size();
  std::vector<char> in_e(n);
  for (std::size_t p = 0; p < n; ++p) in_e[p] = block_of[p] < j;
  return split_pattern(n, allowed, in_e);
}

TriangularAlgebra incidence_algebra(const Poset &poset, const std::vector<std::size_t> &downset) {
  const std::size_t n = poset.size();
  if (!poset.is_connected()) throw Error(ErrorKind::Disconnected, "poset comparability graph is not connected");
  std::vector<char> in_e(n, 0);
  for (auto x : downset) {
    if (x >= n) throw Error(ErrorKind::BadSplit, "downset element out of range");
    in_e[x] = 1;
  }
  const auto count = static_cast<std::size_t>(std::count(in_e.begin(), in_e.end(), 1));
  if (count == 0 || count == n) throw Error(ErrorKind::BadSplit, "downset must be nonempty and proper");
  if (!poset.is_downset(downset)) throw Error(ErrorKind::BadSplit, "split set is not a downset");
  bool crossing = false;
  for (std::size_t x = 0; x < n && !crossing; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (in_e[x] && !in_e[y] && poset.leq(x, y)) {
        crossing = true;
        break;
      }
    }
  }
  if (!crossing) throw Error(ErrorKind::BadSplit, "no relation crosses the split; bimodule is zero");
  std::vector<char> allowed(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) allowed[x * n + y] = poset.leq(x, y);
  }
  try {
    return split_pattern(n, allowed, in_e);
  } catch (const Error &err) {
    if (err.kind() == ErrorKind::NotFaithful || err.kind() == ErrorKind::ZeroBimodule) {
      throw Error(ErrorKind::BadSplit, err.what());
    }
    throw;
  }
}

} // namespace trialg
