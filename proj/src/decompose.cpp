#include "trialg/decompose.hpp"

#include <algorithm>

namespace trialg {

namespace {

std::vector<std::string> basis_tuple(const FiniteAlgebra &alg, std::initializer_list<std::size_t> idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(alg.labels()[i]);
  return out;
}

bool values_central(const TriangularAlgebra &t, const BilinearMap &mu, std::size_t &wi, std::size_t &wj) {
  const auto &alg = t.algebra();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (!alg.is_central(mu.value(alg, i, j))) {
        wi = i;
        wj = j;
        return false;
      }
    }
  }
  return true;
}

} // namespace

BilinearMap assemble(const TriangularAlgebra &t, const Decomposition &d) {
  const auto &alg = t.algebra();
  const std::size_t n = alg.dim();
  std::vector<Element> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element bi = alg.basis(i), bj = alg.basis(j);
      values.push_back(alg.multiply(d.lambda0, alg.bracket(bi, bj)) + alg.bracket(bi, alg.bracket(bj, d.r)) + d.mu.value(alg, i, j));
    }
  }
  return BilinearMap::from_values(alg, values);
}

Decomposition decompose(const TriangularAlgebra &t, const BilinearMap &phi) {
  const auto &alg = t.algebra();
  const std::size_t n = alg.dim();

  if (auto v = law_violation(alg, phi, MapLaw::LieBider)) {
    const auto [a, b, c] = *v;
    const auto [r1, r2] = law_residual(alg, phi, MapLaw::LieBider, {alg.basis(a), alg.basis(b), alg.basis(c)});
    throw DecompositionError(ErrorKind::NotLieBider, "map violates the Lie biderivation identities", basis_tuple(alg, {a, b, c}),
                             r1.is_zero() ? r2 : r1);
  }

  Decomposition d;
  d.r = phi.apply(alg, t.e(), t.e());

  // rest(b_i, b_j) = phi(b_i, b_j) - [b_i, [b_j, r]]
  std::vector<Element> rest;
  std::vector<Element> brackets;
  rest.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element bi = alg.basis(i), bj = alg.basis(j);
      rest.push_back(phi.value(alg, i, j) - alg.bracket(bi, alg.bracket(bj, d.r)));
      brackets.push_back(alg.bracket(bi, bj));
    }
  }

  // lambda0 = sum_s c_s z_s from the eTf components: e (c_s z_s [b_i, b_j]) f = e rest f.
  const auto &center = t.center();
  SparseMatrix sys(0, center.size());
  Vector rhs;
  std::vector<std::size_t> row_pair;
  for (std::size_t p = 0; p < n * n; ++p) {
    std::vector<Vector> cols;
    for (const auto &z : center) cols.push_back(t.peirce(alg.multiply(z, brackets[p])).m.coords);
    const auto target = t.peirce(rest[p]).m.coords;
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(center.size());
      for (std::size_t s = 0; s < center.size(); ++s) row[s] = cols[s][k];
      if (is_zero(row) && sgn(target[k]) == 0) continue;
      sys.append_dense_row(row);
      rhs.push_back(target[k]);
      row_pair.push_back(p);
    }
  }
  Vector c;
  try {
    c = solve(sys, rhs);
  } catch (const InconsistentSystem &) {
    // Locate the first basis pair whose equations make the system infeasible.
    SparseMatrix partial(0, center.size());
    Vector partial_rhs;
    for (std::size_t r = 0; r < sys.rows(); ++r) {
      partial.append_row(sys.row(r));
      partial_rhs.push_back(rhs[r]);
      try {
        solve(partial, partial_rhs);
      } catch (const InconsistentSystem &) {
        const std::size_t p = row_pair[r];
        throw DecompositionError(ErrorKind::NoCentralLambda, "no central lambda0 matches the eTf components",
                                 basis_tuple(alg, {p / n, p % n}), t.peirce(rest[p]).m);
      }
    }
    throw;
  }
  d.lambda0 = alg.zero();
  for (std::size_t s = 0; s < center.size(); ++s) {
    if (sgn(c[s]) != 0) d.lambda0 = d.lambda0 + c[s] * center[s];
  }

  std::vector<Element> mu_values;
  mu_values.reserve(n * n);
  for (std::size_t p = 0; p < n * n; ++p) mu_values.push_back(rest[p] - alg.multiply(d.lambda0, brackets[p]));
  d.mu = BilinearMap::from_values(alg, mu_values);

  std::size_t wi = 0, wj = 0;
  if (!values_central(t, d.mu, wi, wj)) {
    throw DecompositionError(ErrorKind::ResidualNotCentral, "residual map has a non-central value", basis_tuple(alg, {wi, wj}),
                             d.mu.value(alg, wi, wj));
  }
  if (!verify_decomposition(t, phi, d)) {
    throw DecompositionError(ErrorKind::ResidualNotCentral, "reconstruction check failed", {}, alg.zero());
  }
  return d;
}

bool verify_decomposition(const TriangularAlgebra &t, const BilinearMap &phi, const Decomposition &d) {
  const auto &alg = t.algebra();
  if (d.lambda0.algebra_id != alg.id() || d.r.algebra_id != alg.id() || d.mu.algebra_id() != alg.id()) return false;
  if (!alg.is_central(d.lambda0)) return false;
  std::size_t wi = 0, wj = 0;
  if (!values_central(t, d.mu, wi, wj)) return false;
  return assemble(t, d) == phi;
}

bool mu_is_admissible(const TriangularAlgebra &t, const BilinearMap &mu) {
  const auto &alg = t.algebra();
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element br = alg.bracket(alg.basis(i), alg.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!mu.apply(alg, br, alg.basis(k)).is_zero()) return false;
        if (!mu.apply(alg, alg.basis(k), br).is_zero()) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- lemma suite

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck &c) { return c.passed; });
}

const LemmaCheck *LemmaReport::find(const std::string &id) const {
  for (const auto &c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

class Suite {
public:
  Suite(const TriangularAlgebra &t, const BilinearMap &phi) : t_(t), alg_(t.algebra()), phi_(phi) {}

  Element P(const Element &x, const Element &y) const { return phi_.apply(alg_, x, y); }
  Element mul(const Element &x, const Element &y) const { return alg_.multiply(x, y); }
  Element mul(const Element &x, const Element &y, const Element &z) const { return mul(mul(x, y), z); }
  Element br(const Element &x, const Element &y) const { return alg_.bracket(x, y); }
  std::string name(const std::string &role, const Element &x) const { return role + "=" + format_element(alg_, x); }

  // Simple check: every recorded residual must vanish.
  struct Check {
    LemmaCheck c;
    void record(const Element &residual, std::vector<std::string> tuple) {
      ++c.checked;
      if (residual.is_zero()) return;
      if (c.passed) c.witness = LemmaWitness{std::move(tuple), residual};
      c.passed = false;
    }
    void fail(std::vector<std::string> tuple, Element residual) {
      ++c.checked;
      if (c.passed) c.witness = LemmaWitness{std::move(tuple), std::move(residual)};
      c.passed = false;
    }
  };

  // Sign-ambiguous check: residuals for the "+" and "-" readings.
  struct SignCheck {
    LemmaCheck c;
    const char *stated = "+";
    bool plus_ok = true, minus_ok = true, base_ok = true;
    std::optional<LemmaWitness> both_fail, plus_fail, minus_fail;
    void record(const Element &plus, const Element &minus, std::vector<std::string> tuple) {
      ++c.checked;
      const bool p = plus.is_zero(), m = minus.is_zero();
      if (!p && !m && !both_fail) both_fail = LemmaWitness{tuple, plus};
      if (!p && !plus_fail) plus_fail = LemmaWitness{tuple, plus};
      if (!m && !minus_fail) minus_fail = LemmaWitness{tuple, minus};
      plus_ok = plus_ok && p;
      minus_ok = minus_ok && m;
    }
    void fail_base(std::vector<std::string> tuple, Element residual) {
      ++c.checked;
      if (base_ok) c.witness = LemmaWitness{std::move(tuple), std::move(residual)};
      base_ok = false;
    }
    LemmaCheck finish() {
      c.passed = base_ok && (plus_ok || minus_ok);
      c.signs = SignOutcome{stated[0], plus_ok, minus_ok};
      c.note = std::string("stated sign ") + stated + "; sign + " + (plus_ok ? "holds" : "fails") + ", sign - " + (minus_ok ? "holds" : "fails");
      if (!c.witness) {
        if (!c.passed) {
          c.witness = both_fail ? both_fail : (std::string(stated) == "+" ? plus_fail : minus_fail);
        } else if (!(std::string(stated) == "+" ? plus_ok : minus_ok)) {
          c.witness = std::string(stated) == "+" ? plus_fail : minus_fail;
        }
      }
      return c;
    }
  };

  static Check make(std::string id, std::string statement) {
    Check c;
    c.c.id = std::move(id);
    c.c.statement = std::move(statement);
    return c;
  }
  static SignCheck make_signed(std::string id, std::string statement, const char *stated) {
    SignCheck c;
    c.c.id = std::move(id);
    c.c.statement = std::move(statement);
    c.stated = stated;
    return c;
  }

  LemmaReport run() {
    LemmaReport report;
    const Element e = t_.e(), f = t_.f(), one = alg_.unit(), zero = alg_.zero();
    const auto &As = t_.corner_a().basis;
    const auto &Ms = t_.corner_m().basis;
    const auto &Bs = t_.corner_b().basis;
    const Element pee = P(e, e), pff = P(f, f);

    {
      auto ck = make("zero-argument", "phi(0,x) = phi(x,0) = 0");
      for (std::size_t i = 0; i < alg_.dim(); ++i) {
        const Element b = alg_.basis(i);
        ck.record(P(zero, b), {name("x", b), "slot=1"});
        ck.record(P(b, zero), {name("x", b), "slot=2"});
      }
      report.checks.push_back(ck.c);
    }
    {
      auto ck = make("unit-argument-central", "phi(1,x), phi(x,1) central with zero eTf part");
      for (std::size_t i = 0; i < alg_.dim(); ++i) {
        const Element b = alg_.basis(i);
        for (int slot = 0; slot < 2; ++slot) {
          const Element v = slot == 0 ? P(one, b) : P(b, one);
          std::vector<std::string> tuple{name("x", b), slot == 0 ? "phi(1,x)" : "phi(x,1)"};
          if (!alg_.is_central(v)) {
            ck.fail(tuple, v);
          } else {
            ck.record(t_.peirce(v).m, tuple);
          }
        }
      }
      report.checks.push_back(ck.c);
    }
    {
      auto ck = make("corner-offdiagonal", "e phi(e,e) f = -e phi(f,e) f = -e phi(e,f) f = e phi(f,f) f");
      const Element v1 = t_.peirce(pee).m;
      ck.record(v1 + t_.peirce(P(f, e)).m, {"phi(f,e)"});
      ck.record(v1 + t_.peirce(P(e, f)).m, {"phi(e,f)"});
      ck.record(v1 - t_.peirce(pff).m, {"phi(f,f)"});
      report.checks.push_back(ck.c);
    }

    // alpha0 in pi_A(Z(T)) with phi(a, m) = alpha0 a m.
    std::optional<Element> alpha0 = solve_alpha0(As, Ms, report);
    report.alpha0 = alpha0;

    {
      auto ck = make("a-m-scalar", "phi(a,m) = alpha0 a m = -phi(m,a)");
      for (const auto &a : As) {
        for (const auto &m : Ms) {
          std::vector<std::string> tuple{name("a", a), name("m", m)};
          const Element pam = P(a, m);
          if (alpha0) ck.record(pam - mul(*alpha0, a, m), tuple);
          ck.record(pam + P(m, a), tuple);
        }
      }
      if (!alpha0) ck.fail({"alpha0 unavailable"}, zero);
      report.checks.push_back(ck.c);
    }
    {
      auto ck = make_signed("b-m-scalar", "phi(b,m) = alpha0 m b = -phi(m,b), alpha0 m b read with either sign", "+");
      for (const auto &b : Bs) {
        for (const auto &m : Ms) {
          std::vector<std::string> tuple{name("b", b), name("m", m)};
          const Element pbm = P(b, m);
          const Element anti = pbm + P(m, b);
          if (!anti.is_zero()) ck.fail_base(tuple, anti);
          if (alpha0) {
            const Element amb = mul(*alpha0, m, b);
            ck.record(pbm - amb, pbm + amb, tuple);
          }
        }
      }
      if (!alpha0) ck.fail_base({"alpha0 unavailable"}, zero);
      report.checks.push_back(ck.finish());
    }
    {
      auto ck = make("a-b-components", "phi(a,b) = e phi(a,b) e - a phi(e,e) b + f phi(a,b) f, diagonal part central");
      auto ck2 = make("b-a-components", "phi(b,a) = e phi(b,a) e - a phi(f,f) b + f phi(b,a) f, diagonal part central");
      for (const auto &a : As) {
        for (const auto &b : Bs) {
          std::vector<std::string> tuple{name("a", a), name("b", b)};
          for (int order = 0; order < 2; ++order) {
            auto &c = order == 0 ? ck : ck2;
            const Element v = order == 0 ? P(a, b) : P(b, a);
            const auto parts = t_.peirce(v);
            const Element corner = order == 0 ? pee : pff;
            c.record(v - (parts.a - mul(a, corner, b) + parts.b), tuple);
            if (!alg_.is_central(parts.a + parts.b)) c.fail(tuple, parts.a + parts.b);
          }
        }
      }
      report.checks.push_back(ck.c);
      report.checks.push_back(ck2.c);
    }
    {
      auto ck = make("m-n-vanish", "phi(m,n) = 0");
      for (const auto &m : Ms) {
        for (const auto &n : Ms) ck.record(P(m, n), {name("m", m), name("n", n)});
      }
      report.checks.push_back(ck.c);
    }
    {
      auto ab = make("a-a-offdiagonal", "e phi(a1,a2) f = a1 a2 phi(e,e) f");
      auto ba = make("a-a-offdiagonal-swapped", "e phi(a1,a2) f = a2 a1 phi(e,e) f");
      auto diag = make_signed("a-a-diagonal", "f phi(a1,a2) f in pi_B(Z(T)), e phi(a1,a2) e = tau^-1(f phi(a1,a2) f) - alpha0 [a1,a2]", "-");
      for (const auto &a1 : As) {
        for (const auto &a2 : As) {
          std::vector<std::string> tuple{name("a1", a1), name("a2", a2)};
          const auto parts = t_.peirce(P(a1, a2));
          ab.record(parts.m - mul(mul(a1, a2), pee, f), tuple);
          ba.record(parts.m - mul(mul(a2, a1), pee, f), tuple);
          std::optional<Element> pre;
          try {
            pre = t_.tau_inverse(parts.b);
          } catch (const Error &) {
            diag.fail_base(tuple, parts.b);
          }
          if (pre && alpha0) {
            const Element term = mul(*alpha0, br(a1, a2));
            diag.record(parts.a - (*pre + term), parts.a - (*pre - term), tuple);
          }
        }
      }
      if (!alpha0) diag.fail_base({"alpha0 unavailable"}, zero);
      report.checks.push_back(ab.c);
      report.checks.push_back(ba.c);
      report.checks.push_back(diag.finish());
    }
    {
      auto bb = make("b-b-offdiagonal", "e phi(b1,b2) f = e phi(e,e) b1 b2");
      auto bb2 = make("b-b-offdiagonal-swapped", "e phi(b1,b2) f = e phi(e,e) b2 b1");
      auto diag = make_signed("b-b-diagonal", "e phi(b1,b2) e in pi_A(Z(T)), f phi(b1,b2) f = tau(e phi(b1,b2) e) - tau(alpha0) [b1,b2]", "-");
      std::optional<Element> tau_alpha;
      if (alpha0) tau_alpha = t_.tau(*alpha0);
      for (const auto &b1 : Bs) {
        for (const auto &b2 : Bs) {
          std::vector<std::string> tuple{name("b1", b1), name("b2", b2)};
          const auto parts = t_.peirce(P(b1, b2));
          bb.record(parts.m - mul(e, pee, mul(b1, b2)), tuple);
          bb2.record(parts.m - mul(e, pee, mul(b2, b1)), tuple);
          std::optional<Element> img;
          try {
            img = t_.tau(parts.a);
          } catch (const Error &) {
            diag.fail_base(tuple, parts.a);
          }
          if (img && tau_alpha) {
            const Element term = mul(*tau_alpha, br(b1, b2));
            diag.record(parts.b - (*img + term), parts.b - (*img - term), tuple);
          }
        }
      }
      if (!alpha0) diag.fail_base({"alpha0 unavailable"}, zero);
      report.checks.push_back(bb.c);
      report.checks.push_back(bb2.c);
      report.checks.push_back(diag.finish());
    }
    return report;
  }

private:
  std::optional<Element> solve_alpha0(const std::vector<Element> &As, const std::vector<Element> &Ms, LemmaReport &report) {
    auto ck = make("alpha0-exists", "some alpha0 in pi_A(Z(T)) has phi(a,m) = alpha0 a m for all a, m");
    const auto &proj = t_.projection_a();
    const std::size_t n = alg_.dim();
    SparseMatrix sys(0, proj.size());
    Vector rhs;
    std::vector<std::vector<std::string>> row_tuple;
    std::vector<Element> row_value;
    for (const auto &a : As) {
      for (const auto &m : Ms) {
        ++ck.c.checked;
        std::vector<Vector> cols;
        for (const auto &p : proj) cols.push_back(mul(p, a, m).coords);
        const Element target = P(a, m);
        for (std::size_t k = 0; k < n; ++k) {
          Vector row(proj.size());
          for (std::size_t s = 0; s < proj.size(); ++s) row[s] = cols[s][k];
          sys.append_dense_row(row);
          rhs.push_back(target.coords[k]);
          row_tuple.push_back({name("a", a), name("m", m)});
          row_value.push_back(target);
        }
      }
    }
    std::optional<Element> alpha0;
    try {
      const Vector c = solve(sys, rhs);
      Element v = alg_.zero();
      for (std::size_t s = 0; s < proj.size(); ++s) {
        if (sgn(c[s]) != 0) v = v + c[s] * proj[s];
      }
      alpha0 = v;
      ck.c.note = "alpha0 = " + format_element(alg_, v);
    } catch (const InconsistentSystem &) {
      SparseMatrix partial(0, proj.size());
      Vector prhs;
      for (std::size_t r = 0; r < sys.rows(); ++r) {
        partial.append_row(sys.row(r));
        prhs.push_back(rhs[r]);
        try {
          solve(partial, prhs);
        } catch (const InconsistentSystem &) {
          ck.c.passed = false;
          ck.c.witness = LemmaWitness{row_tuple[r], row_value[r]};
          break;
        }
      }
    }
    report.checks.push_back(ck.c);
    return alpha0;
  }

  const TriangularAlgebra &t_;
  const FiniteAlgebra &alg_;
  const BilinearMap &phi_;
};

} // namespace

LemmaReport lemma_suite(const TriangularAlgebra &t, const BilinearMap &phi) { return Suite(t, phi).run(); }

} // namespace trialg
