#include "trialg/triangular.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace trialg;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadInput;
}

Element el(const FiniteAlgebra &A, std::initializer_list<std::pair<const char *, long>> terms) {
  Element x = A.zero();
  for (const auto &[label, c] : terms) {
    const auto it = std::find(A.labels().begin(), A.labels().end(), label);
    REQUIRE(it != A.labels().end());
    x.coords[static_cast<std::size_t>(it - A.labels().begin())] += c;
  }
  return x;
}

} // namespace

TEST_CASE("upper triangular constructors") {
  const auto t2 = upper_triangular(2, 1);
  CHECK(t2.dim() == 3);
  CHECK(t2.e() == el(t2.algebra(), {{"E11", 1}}));
  CHECK(t2.corner_m().dim() == 1);

  const auto t3 = upper_triangular(3, 2);
  CHECK(t3.dim() == 6);
  CHECK(t3.corner_a().dim() == 3);
  CHECK(t3.corner_m().dim() == 2);
  CHECK(t3.corner_b().dim() == 1);

  const auto t4 = upper_triangular(4, 2);
  CHECK(t4.dim() == 10);
  CHECK(t4.corner_m().dim() == 4);

  CHECK(kind_of([] { upper_triangular(3, 0); }) == ErrorKind::BadSplit);
  CHECK(kind_of([] { upper_triangular(3, 3); }) == ErrorKind::BadSplit);
  CHECK(kind_of([] { upper_triangular(1, 1); }) == ErrorKind::BadSplit);
}

TEST_CASE("block constructors") {
  const auto b21 = block_upper_triangular({2, 1}, 1);
  CHECK(b21.dim() == 7);
  CHECK(b21.corner_a().dim() == 4);
  CHECK(b21.corner_m().dim() == 2);
  CHECK(block_upper_triangular({2, 2}, 1).dim() == 12);
  const auto b11 = block_upper_triangular({1, 1}, 1);
  CHECK(b11.algebra().structure() == upper_triangular(2, 1).algebra().structure());
  CHECK(kind_of([] { block_upper_triangular({3}, 1); }) == ErrorKind::SingleBlock);
  CHECK(kind_of([] { block_upper_triangular({1, 2}, 2); }) == ErrorKind::BadSplit);
}

TEST_CASE("incidence algebras") {
  // Chain 1 <= 2 <= 3 with the split {1} is T3 split after the first position.
  const auto chain = Poset::from_relations(3, {{0, 1}, {1, 2}});
  const auto t = incidence_algebra(chain, {0});
  CHECK(t.algebra().structure() == upper_triangular(3, 1).algebra().structure());
  CHECK(t.e().coords == upper_triangular(3, 1).e().coords);

  // Seven-element poset generated by 1<=3, 2<=3, 3<=4, 4<=5, 5<=6, 5<=7.
  const auto seven = Poset::from_relations(7, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
  const auto big = incidence_algebra(seven, {0, 1, 2, 3, 4});
  const char *pattern[7] = {"1011111", "0111111", "0011111", "0001111", "0000111", "0000010", "0000001"};
  std::size_t expected = 0;
  for (std::size_t p = 0; p < 7; ++p) {
    for (std::size_t q = 0; q < 7; ++q) {
      const bool allowed = pattern[p][q] == '1';
      expected += allowed;
      CHECK(seven.leq(p, q) == allowed);
    }
  }
  CHECK(big.dim() == expected);
  CHECK(big.dim() == 26);

  CHECK(kind_of([] { incidence_algebra(Poset::from_relations(2, {}), {0}); }) == ErrorKind::Disconnected);
  CHECK(kind_of([&] { incidence_algebra(chain, {1}); }) == ErrorKind::BadSplit);  // {2} is not a downset
  CHECK(kind_of([&] { incidence_algebra(chain, {0, 1, 2}); }) == ErrorKind::BadSplit);
  CHECK(kind_of([] { Poset::from_relations(2, {{0, 1}, {1, 0}}); }) == ErrorKind::BadPoset);
}

TEST_CASE("Peirce decomposition") {
  const auto t2 = upper_triangular(2, 1);
  const auto &A2 = t2.algebra();
  const auto p = t2.peirce(A2.basis(1));
  CHECK(p.a.is_zero());
  CHECK(p.m == A2.basis(1));
  CHECK(p.b.is_zero());
  const auto u = t2.peirce(A2.unit());
  CHECK(u.a == t2.e());
  CHECK(u.m.is_zero());
  CHECK(u.b == t2.f());

  const auto t3 = upper_triangular(3, 2);
  const auto &A3 = t3.algebra();
  const auto q = t3.peirce(el(A3, {{"E11", 1}, {"E23", 1}}));
  CHECK(q.a == el(A3, {{"E11", 1}}));
  CHECK(q.m == el(A3, {{"E23", 1}}));
  CHECK(q.b.is_zero());
}

TEST_CASE("tau") {
  const auto t3 = upper_triangular(3, 2);
  const auto &A = t3.algebra();
  const Element one_a = el(A, {{"E11", 1}, {"E22", 1}});
  CHECK(t3.tau(Rational(2) * one_a) == Rational(2) * el(A, {{"E33", 1}}));
  CHECK(t3.tau(A.zero()).is_zero());
  CHECK(t3.tau_inverse(el(A, {{"E33", 1}})) == one_a);
  CHECK(kind_of([&] { t3.tau(el(A, {{"E11", 1}})); }) == ErrorKind::NotInProjection);

  // a m = m tau(a) on every bimodule basis element.
  for (const auto &t : {upper_triangular(4, 2), block_upper_triangular({2, 1}, 1), block_upper_triangular({2, 2}, 1)}) {
    const auto &B = t.algebra();
    for (const auto &a : t.projection_a()) {
      const auto b = t.tau(a);
      for (const auto &m : t.corner_m().basis) CHECK(B.multiply(a, m) == B.multiply(m, b));
    }
  }
}

TEST_CASE("bimodule homomorphisms") {
  for (const auto &t : {upper_triangular(2, 1), upper_triangular(3, 2), upper_triangular(4, 1), block_upper_triangular({2, 2}, 1)}) {
    const auto hom = t.bimodule_hom_basis();
    REQUIRE(hom.size() == 1);
    CHECK(hom[0].entries == BimoduleMap::identity(t.corner_m().dim()).entries);
    CHECK(t.standard_form_check());
  }
}

TEST_CASE("triangular split validation") {
  const auto alg = upper_triangular(3, 1).algebra_ptr();
  CHECK(kind_of([&] { TriangularAlgebra(alg, alg->basis(1)); }) == ErrorKind::NotIdempotent);
  // E22 + E33 is idempotent but E22 T E11 side is not zero: f T e = span(E12)
  const Element e = alg->basis(3) + alg->basis(5);
  CHECK(kind_of([&] { TriangularAlgebra(alg, e); }) == ErrorKind::NotTriangular);
  CHECK(kind_of([&] { TriangularAlgebra(alg, alg->unit()); }) == ErrorKind::ZeroBimodule);

  // Poset 1 <= 3, 2 <= 3 split at {1}: E22 annihilates the bimodule span(E13).
  std::vector<char> allowed{1, 0, 1, 0, 1, 1, 0, 0, 1};
  const auto v = pattern_algebra(3, allowed);
  CHECK(kind_of([&] { TriangularAlgebra(v, v->basis(0)); }) == ErrorKind::NotFaithful);
  const auto poset = Poset::from_relations(3, {{0, 2}, {1, 2}});
  CHECK(kind_of([&] { incidence_algebra(poset, {0}); }) == ErrorKind::BadSplit);
  CHECK_NOTHROW(incidence_algebra(poset, {0, 1}));
}

TEST_CASE("hypothesis report") {
  const auto h3 = upper_triangular(3, 2).hypothesis_report();
  CHECK(h3.cond_i);
  CHECK(h3.cond_ii);
  CHECK(h3.cond_iii);
  CHECK(h3.cond_iv == Cond4::Holds);
  CHECK(h3.all_hold());

  const auto h2 = upper_triangular(2, 1).hypothesis_report();
  CHECK_FALSE(h2.cond_ii);
  CHECK(h2.details.a_commutative);
  CHECK(h2.details.b_commutative);

  const auto hb = block_upper_triangular({2, 1}, 1).hypothesis_report();
  CHECK(hb.cond_ii);
  CHECK_FALSE(hb.details.a_commutative);
}
