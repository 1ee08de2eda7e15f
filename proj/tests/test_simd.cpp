#include "trialg/modp.hpp"
#include "trialg/simd/modp_kernels.hpp"

#include <doctest.h>

#include <random>

using namespace trialg;
using namespace trialg::simd;

namespace {

std::vector<double> residues(std::mt19937_64 &rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto &x : v) {
    // Mix in the extremes 0 and p-1 where reductions are most fragile.
    const auto pick = rng() % 10;
    x = static_cast<double>(pick == 0 ? 0 : pick == 1 ? kPrime - 1 : rng() % kPrime);
  }
  return v;
}

} // namespace

TEST_CASE("scalar kernels match integer arithmetic") {
  std::mt19937_64 rng(1);
  const auto &k = scalar_kernels();
  for (int t = 0; t < 50; ++t) {
    auto dst = residues(rng, 37), src = residues(rng, 37);
    const std::uint64_t f = rng() % kPrime;
    auto expect = dst;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      expect[i] = static_cast<double>((static_cast<std::uint64_t>(dst[i]) + mul_mod(f, static_cast<std::uint64_t>(src[i]))) % kPrime);
    }
    k.axpy(dst.data(), src.data(), static_cast<double>(f), dst.size());
    CHECK(dst == expect);
  }
  CHECK(mul_mod(inv_mod(12345), 12345) == 1);
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
  const auto *vk = avx2_kernels();
  if (!vk) {
    MESSAGE("AVX2 kernels unavailable on this CPU/build; equivalence not exercised");
    return;
  }
  const auto &sk = scalar_kernels();
  std::mt19937_64 rng(2);
  // Lengths cover the vector body, the tail and the empty case.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 15u, 16u, 17u, 63u, 64u, 257u}) {
    for (int t = 0; t < 40; ++t) {
      auto a = residues(rng, n), src = residues(rng, n);
      auto b = a;
      const double f = static_cast<double>(t == 0 ? kPrime - 1 : t == 1 ? 0 : rng() % kPrime);
      sk.axpy(a.data(), src.data(), f, n);
      vk->axpy(b.data(), src.data(), f, n);
      CHECK(a == b);
      sk.scale(a.data(), f, n);
      vk->scale(b.data(), f, n);
      CHECK(a == b);
    }
  }
}

TEST_CASE("mod-p row screening is identical under both kernel sets") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t rows = 5 + rng() % 60, cols = 3 + rng() % 40;
    std::vector<SparseRow> data(rows);
    for (auto &row : data) {
      for (std::uint32_t c = 0; c < cols; ++c) {
        if (rng() % 4 == 0) row.push_back({c, make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3)});
      }
    }
    const auto s = modp::independent_rows(data, cols, scalar_kernels());
    REQUIRE(s.has_value());
    SparseMatrix m(0, cols);
    for (const auto &r : data) m.append_row(r);
    CHECK(s->size() == rank(m));
    if (const auto *vk = avx2_kernels()) CHECK(*s == *modp::independent_rows(data, cols, *vk));
  }
}

TEST_CASE("denominators divisible by p defer to exact elimination") {
  std::vector<SparseRow> rows{{{0, make_rational(1, static_cast<long>(kPrime))}}};
  CHECK_FALSE(modp::independent_rows(rows, 1).has_value());
  SparseMatrix m(0, 1);
  m.append_row(rows[0]);
  CHECK(rank(m) == 1);
}
