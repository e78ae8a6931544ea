#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace butson;

namespace {

IntPoly ints(std::initializer_list<long> c) {
  IntPoly p;
  for (long v : c)
    p.emplace_back(v);
  return p;
}

CycloElement from_counts(int level, std::vector<int> counts) {
  return CycloElement::root_sum(level, counts);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclo_poly(1) == ints({-1, 1}));
  CHECK(cyclo_poly(2) == ints({1, 1}));
  CHECK(cyclo_poly(8) == ints({1, 0, 0, 0, 1}));
  CHECK(cyclo_poly(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclo_poly(15) == ints({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  for (int L = 1; L <= 60; ++L)
    CHECK(static_cast<int>(cyclo_poly(L).size()) == euler_phi(L) + 1);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^L - 1") {
  for (int L : {6, 12, 20, 30, 36}) {
    IntPoly prod = ints({1});
    for (int d = 1; d <= L; ++d) {
      if (L % d)
        continue;
      const auto &p = cyclo_poly(d);
      IntPoly next(prod.size() + p.size() - 1);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
          next[i + j] += prod[i] * p[j];
      prod = next;
    }
    IntPoly expected(L + 1);
    expected[0] = -1;
    expected[L] = 1;
    CHECK(prod == expected);
  }
}

TEST_CASE("root of unity equality uses minimal order") {
  CHECK(RootOfUnity(8, 2) == RootOfUnity(4, 1));
  CHECK(RootOfUnity(6, 3) == RootOfUnity(2, 1));
  CHECK(RootOfUnity(12, -1).exponent() == 11);
  CHECK(RootOfUnity(12, 8).minimal_order() == 3);
  CHECK(RootOfUnity(8, 1) * RootOfUnity(8, 7) == RootOfUnity(1, 0));
  CHECK(RootOfUnity(4, 1).exponent_at(24) == 6);
}

TEST_CASE("ring operations") {
  const auto z8 = CycloElement::root(8, 1);
  CHECK(z8 * CycloElement::root(8, 7) == CycloElement::integer(8, 1));
  const auto s = z8 - CycloElement::root(8, 3);
  CHECK(s * s == CycloElement::integer(8, 2));
  CHECK(CycloElement::root(12, 5).conj() == CycloElement::root(12, 7));
  CHECK(CycloElement::root(4, 2) == CycloElement::integer(4, -1));
  CHECK(static_cast<int>(CycloElement::root(12, 3).coeffs().size()) == 4);
  CHECK(CycloElement::zero(9).is_zero());
  CHECK_THROWS_AS((void)(CycloElement::root(4, 1) + CycloElement::root(8, 1)),
                  std::invalid_argument);
}

TEST_CASE("arithmetic agrees with complex numbers") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int L : {5, 8, 12, 15, 24}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> a(L), b(L);
      std::complex<double> za = 0, zb = 0;
      for (int e = 0; e < L; ++e) {
        a[e] = std::max(0, c(rng));
        b[e] = std::max(0, c(rng));
        za += static_cast<double>(a[e]) * oracle::zeta(L, e);
        zb += static_cast<double>(b[e]) * oracle::zeta(L, e);
      }
      const auto x = from_counts(L, a), y = from_counts(L, b);
      CHECK(std::abs((x * y).to_complex() - za * zb) < 1e-8);
      CHECK(std::abs((x - y).to_complex() - (za - zb)) < 1e-8);
      CHECK(std::abs(x.conj().to_complex() - std::conj(za)) < 1e-8);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK(x.conj().conj() == x);
      CHECK((x * y).embed(2 * L) == x.embed(2 * L) * y.embed(2 * L));
      CHECK((x + y).embed(3 * L) == x.embed(3 * L) + y.embed(3 * L));
      CHECK(x.embed(L) == x);
    }
  }
}

TEST_CASE("zeta_L satisfies its cyclotomic polynomial") {
  for (int L = 1; L <= 40; ++L) {
    const auto &p = cyclo_poly(L);
    CycloElement sum = CycloElement::zero(L);
    for (std::size_t i = 0; i < p.size(); ++i)
      sum += CycloElement::root(L, static_cast<int>(i)) * p[i];
    CHECK(sum.is_zero());
  }
}

TEST_CASE("sqrt_embed examples") {
  CHECK(sqrt_embed(4, 1) == CycloElement::integer(1, 2));
  std::vector<Integer> sqrt2{0, 1, 0, -1};
  CHECK(sqrt_embed(2, 8).coeffs() == sqrt2);
  const auto g5 = sqrt_embed(5, 5);
  CHECK(g5 == CycloElement::root(5, 1) - CycloElement::root(5, 2) - CycloElement::root(5, 3) +
                  CycloElement::root(5, 4));
  CHECK_THROWS_AS(sqrt_embed(2, 4), std::invalid_argument);
  CHECK(sqrt_conductor(2) == 8);
  CHECK(sqrt_conductor(3) == 12);
  CHECK(sqrt_conductor(5) == 5);
  CHECK(sqrt_conductor(9) == 1);
  CHECK(sqrt_conductor(12) == 12);
}

TEST_CASE("sqrt_embed squares to m and is positive") {
  for (int m = 1; m <= 30; ++m) {
    const int L = sqrt_conductor(m);
    const auto g = sqrt_embed(m, L);
    CHECK(g * g == CycloElement::integer(L, m));
    const auto z = g.to_complex();
    CHECK(std::abs(z.real() - std::sqrt(static_cast<double>(m))) < 1e-9);
    CHECK(std::abs(z.imag()) < 1e-9);
    CHECK(sqrt_embed(m, 2 * L) == g.embed(2 * L));
  }
}

TEST_CASE("detect_scaled_root") {
  const auto one8 = CycloElement::integer(8, 1);
  CHECK_FALSE(detect_scaled_root(sqrt_embed(2, 8), one8).has_value());
  CHECK(detect_scaled_root(CycloElement::root(6, 5), CycloElement::integer(6, 1)) ==
        RootOfUnity(6, 5));
  const auto two = CycloElement::integer(6, 2);
  CHECK(detect_scaled_root(CycloElement::root(6, 2) * Integer(2), two) == RootOfUnity(6, 2));
  for (int L : {8, 24, 40}) {
    const auto g = sqrt_embed(2, L);
    const RootDetector detector(g);
    for (int e = 0; e < L; ++e)
      CHECK(detector.find(g * CycloElement::root(L, e)) == e);
    CHECK_FALSE(detector.find(CycloElement::root(L, 1)).has_value());
  }
}

TEST_CASE("exact division") {
  const auto x = CycloElement::root(12, 1) * Integer(6) + CycloElement::integer(12, 4);
  const auto q = x.divide_exact(2);
  REQUIRE(q.has_value());
  CHECK(*q * Integer(2) == x);
  CHECK_FALSE(x.divide_exact(4).has_value());
}
