#include "doctest.h"

#include <algorithm>
#include <random>

#include "knot/zmodlin.hpp"

using namespace knot;

namespace {

ModMatrix mat(std::uint64_t n, std::vector<ModRow> rows) {
  ModMatrix m(n, rows.empty() ? 0 : rows[0].size());
  for (auto& r : rows) m.add_row(std::move(r));
  return m;
}

ModRow random_row(std::mt19937& rng, std::size_t cols, std::uint64_t n) {
  std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
  ModRow r(cols);
  for (auto& x : r) x = d(rng);
  return r;
}

}  // namespace

TEST_CASE("howell basics") {
  CHECK(howell(mat(6, {{0, 0}, {0, 0}})).rank() == 0);

  HowellBasis id6 = howell(mat(6, {{1, 0}, {0, 1}}));
  CHECK(id6.rank() == 2);
  CHECK(id6.span_size() == 36);

  HowellBasis h = howell(mat(6, {{2, 0}, {0, 3}}));
  CHECK(h.span_size() == 6);
  // canonical under row order
  CHECK(howell(mat(6, {{0, 3}, {2, 0}})) == h);
}

TEST_CASE("howell canonicity under invertible row operations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint64_t n = trial % 2 ? 12 : 27;
    std::size_t rows = 4, cols = 5;
    std::vector<ModRow> a;
    for (std::size_t i = 0; i < rows; ++i) a.push_back(random_row(rng, cols, n));
    HowellBasis h1 = howell(mat(n, a));
    // shuffle and add random multiples of other rows (span-preserving)
    std::shuffle(a.begin(), a.end(), rng);
    for (int k = 0; k < 6; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
      std::uniform_int_distribution<std::uint64_t> coef(0, n - 1);
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      std::uint64_t c = coef(rng);
      for (std::size_t t = 0; t < cols; ++t)
        a[i][t] = (a[i][t] + c * a[j][t]) % n;
    }
    CHECK(howell(mat(n, a)) == h1);
  }
}

TEST_CASE("kernel") {
  CHECK(kernel(mat(5, {{1, 0}, {0, 1}})).rank() == 0);

  HowellBasis k = kernel(mat(4, {{2}}));
  REQUIRE(k.rank() == 1);
  CHECK(k.rows[0] == ModRow{2});

  // rank-nullity over Z/27 by 3-adic valuation: |kernel| * |span| = 27^20
  std::mt19937 rng(42);
  ModMatrix m(27, 30);
  for (int i = 0; i < 20; ++i) m.add_row(random_row(rng, 30, 27));
  HowellBasis ker = kernel(m);
  HowellBasis span = howell(m);
  CHECK(ker.span_size_valuation(3) + span.span_size_valuation(3) == 60);

  // soundness: every kernel row really annihilates
  for (const ModRow& x : ker.rows) {
    ModRow prod(30, 0);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = 0; j < 30; ++j)
        prod[j] = (prod[j] + x[i] * m.rows[i][j]) % 27;
    for (auto v : prod) CHECK(v == 0);
  }
}

TEST_CASE("solve") {
  ModMatrix m1 = mat(6, {{3}});
  auto x0 = solve(m1, {0});
  REQUIRE(x0.has_value());

  auto x1 = solve(m1, {3});
  REQUIRE(x1.has_value());
  CHECK(((*x1)[0] * 3) % 6 == 3);

  CHECK(!solve(mat(4, {{2}}), {1}).has_value());
}

TEST_CASE("quotient invariants") {
  HowellBasis a = howell(mat(9, {{1}}));
  CHECK(quotient_invariants(a, a).factors.empty());

  HowellBasis b = howell(mat(9, {{3}}));
  CHECK(quotient_invariants(a, b).factors == std::vector<std::uint64_t>{3});

  HowellBasis full = howell(mat(6, {{1, 0}, {0, 1}}));
  HowellBasis zero{6, 2, {}};
  CHECK(quotient_invariants(full, zero).factors ==
        std::vector<std::uint64_t>{6, 6});

  // B not inside A
  HowellBasis small = howell(mat(9, {{3}}));
  HowellBasis big = howell(mat(9, {{1}}));
  CHECK_THROWS_AS(quotient_invariants(small, big), NotContained);
}

TEST_CASE("quotient product equals size ratio") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t n = 12;
    std::vector<ModRow> arows{random_row(rng, 3, n), random_row(rng, 3, n)};
    HowellBasis a = howell(mat(n, arows));
    if (a.rank() == 0) continue;
    // b = a's rows doubled (guaranteed inside)
    std::vector<ModRow> brows;
    for (const ModRow& r : a.rows) {
      ModRow s(r);
      for (auto& v : s) v = (v * 2) % n;
      brows.push_back(std::move(s));
    }
    HowellBasis b = howell(mat(n, brows));
    AbelianInvariants q = quotient_invariants(a, b);
    CHECK(q.order() * b.span_size() == a.span_size());
  }
}

TEST_CASE("annihilator double dual") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t n = trial % 2 ? 8 : 18;
    std::vector<ModRow> rows{random_row(rng, 4, n), random_row(rng, 4, n)};
    HowellBasis s = howell(mat(n, rows));
    HowellBasis ann = annihilator(s);
    HowellBasis back = annihilator(ann);
    CHECK(back == s);
  }
}

TEST_CASE("smith invariants") {
  CHECK(smith_invariants({{2, 0}, {0, 3}}, 2) == std::vector<std::uint64_t>{6});
  CHECK(smith_invariants({{1, 0}, {0, 1}}, 2).empty());
  CHECK(smith_invariants({{4, 0}, {0, 6}}, 2) ==
        std::vector<std::uint64_t>{2, 12});
}
