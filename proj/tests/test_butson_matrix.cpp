#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace butson;
using oracle::cat;
using oracle::grid;

TEST_CASE("verify_butson") {
  CHECK(verify_butson(ExponentGrid(2, {{0, 0}, {0, 1}})));
  const auto ones = verify_butson(ExponentGrid(2, {{0, 0}, {0, 0}}));
  CHECK_FALSE(ones);
  CHECK(ones.witness == std::pair{0, 1});
  const ExponentGrid m5(4, {{2, 2, 2, 2}, {0, 2, 0, 2}, {1, 1, 3, 3}, {1, 3, 3, 1}});
  CHECK(verify_butson(m5));
  CHECK(oracle::numeric_butson(m5));
  CHECK_THROWS_AS(ButsonMatrix::from_grid(ExponentGrid(2, {{0, 0}, {0, 0}})), NotButsonError);
  CHECK_FALSE(ButsonMatrix::try_from(ExponentGrid(3, {{0, 0}, {0, 1}})).has_value());
}

TEST_CASE("verify_butson agrees with floating point on random grids") {
  std::mt19937 rng(1);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 2 + trial % 5;
    std::uniform_int_distribution<int> e(0, k - 1);
    std::vector<int> exps(4);
    for (int &x : exps)
      x = e(rng);
    const ExponentGrid g(2, k, exps);
    const bool exact = static_cast<bool>(verify_butson(g));
    positives += exact;
    CHECK(exact == oracle::numeric_butson(g));
  }
  CHECK(positives > 0);
}

TEST_CASE("power_map") {
  const auto f3 = fourier(3);
  CHECK(power_map(f3, 1) == f3.grid());
  const auto conj = power_map(f3, 2);
  CHECK(conj == adjoint(f3).grid());
  CHECK(verify_butson(conj));
  const auto u6 = grid(6, {{1, 2}, {4, 2}});
  const auto c = power_map(u6, 5);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(c(i, j) == (6 - u6(i, j)) % 6);
}

TEST_CASE("predicates") {
  const auto f2 = fourier(2);
  CHECK(entry_set(f2) == EntrySet{2, {0, 1}});
  CHECK(is_hermitian(f2));
  CHECK_FALSE(is_hermitian(cat("M8")));
  CHECK(contains_exponent(f2, 1));
  CHECK_FALSE(avoids_real(f2));
  const auto z = scale_by_root(f2, RootOfUnity(8, 1));
  CHECK(z.k() == 8);
  CHECK(entry_set(z) == EntrySet{8, {1, 5}});
  const auto u6 = grid(6, {{1, 2}, {4, 2}});
  CHECK(avoids_real(u6));
  const auto lifted = lift(f2, 6);
  CHECK(lifted.k() == 6);
  CHECK(entry_set(lifted) == EntrySet{6, {0, 3}});
  CHECK_THROWS_AS(lift(f2, 5), std::invalid_argument);
}

TEST_CASE("fourier") {
  CHECK(fourier(1).grid() == ExponentGrid(1, 1, {0}));
  CHECK(fourier(2).grid() == ExponentGrid(2, {{0, 0}, {0, 1}}));
  for (int n = 1; n <= 8; ++n)
    CHECK(verify_butson(fourier(n).grid()));
}

TEST_CASE("text format") {
  CHECK(parse_butson("butson 2 2\n0 0\n0 1\n") == fourier(2));
  CHECK(serialize(fourier(3)) == "butson 3 3\n0 0 0\n0 1 2\n0 2 1\n");
  CHECK(parse_butson("# comment\n\nbutson 2 2\n0 0\n\n0 1\n") == fourier(2));
  try {
    (void)parse_grid("butson 2 2\n0 0\n0 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("exponent 2 out of range for k=2") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_grid("butson 2 2\n0 0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_grid("butson 2 2\n0 0 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_grid("hadamard 2 2\n0 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_butson("butson 2 2\n0 0\n0 0\n"), NotButsonError);
}

TEST_CASE("Butson property survives adjoint, permutations and scaling") {
  std::mt19937 rng(7);
  for (const auto &e : catalog()) {
    const auto &h = e.matrix;
    CHECK(verify_butson(adjoint(h).grid()));
    std::vector<int> rows(h.n()), cols(h.n());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<int> exps;
    for (int i : rows)
      for (int j : cols)
        exps.push_back(h(i, j));
    CHECK(verify_butson(ExponentGrid(h.n(), h.k(), exps)));
    for (int t : {3, 5, 8, 12})
      CHECK(verify_butson(scale_by_root(h, RootOfUnity(t, 1)).grid()));
  }
}
