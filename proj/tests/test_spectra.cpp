#include <doctest.h>

#include <numeric>

#include "oracles.hpp"

using namespace butson;
using oracle::cat;
using oracle::grid;

TEST_CASE("reconstruct_fraction") {
  const auto f = reconstruct_fraction(7.0 / 24.0, 96, 1e-9);
  REQUIRE(f.has_value());
  CHECK(f->num == 7);
  CHECK(f->den == 24);
  CHECK_FALSE(reconstruct_fraction(std::sqrt(2.0) - 1.0, 96, 1e-9).has_value());
  CHECK(reconstruct_fraction(0.0, 10, 1e-9)->num == 0);
}

TEST_CASE("estimate_spectrum") {
  CHECK(estimate_spectrum(cat("M8"), 24) == SpectrumClaim{2, 8, {1, 7}});
  CHECK(estimate_spectrum(cat("M6"), 24) == SpectrumClaim{4, 6, {1, 1, 5, 5}});
  CHECK(estimate_spectrum(cat("M24"), 48) == SpectrumClaim{2, 24, {7, 23}});
  CHECK(estimate_spectrum(cat("M5"), 24) == SpectrumClaim{4, 5, {1, 2, 3, 4}});
  CHECK(estimate_spectrum(cat("K12"), 24) == SpectrumClaim{4, 12, {1, 5, 7, 11}});
  // No finite order within the bound.
  CHECK_FALSE(estimate_spectrum(grid(6, {{0, 0}, {2, 5}}), 96).has_value());
}

TEST_CASE("certify_spectrum") {
  CHECK(certify_spectrum(cat("M8"), {2, 8, {1, 7}}));
  CHECK_FALSE(certify_spectrum(cat("M8"), {2, 8, {1, 3}}));
  CHECK_FALSE(certify_spectrum(cat("M8"), {3, 8, {1, 7}}));
  CHECK(certify_spectrum(cat("M5"), {4, 5, {1, 2, 3, 4}}));
  CHECK(certify_spectrum(cat("M8"), {2, 24, {3, 21}}));
  CHECK_THROWS_AS((void)certify_spectrum(cat("M8"), {2, 8, {1}}), std::invalid_argument);
}

TEST_CASE("unitary_order") {
  CHECK(unitary_order(cat("M8"), 16) == 8);
  CHECK(unitary_order(scale_by_root(cat("GOW2"), RootOfUnity(8, 1)), 12) == 3);
  CHECK(unitary_order(fourier(2), 16) == 2);
  CHECK(unitary_order(cat("M8"), 7) == std::nullopt);
  CHECK(unitary_order(cat("K12"), 96) == 12);
}

TEST_CASE("estimates certify for every catalog matrix") {
  for (const auto &e : catalog()) {
    const auto claim = estimate_spectrum(e.matrix, default_bound(e.matrix.k()));
    REQUIRE(claim.has_value());
    CHECK(certify_spectrum(e.matrix, *claim));
  }
}

TEST_CASE("certified spectra are closed under the Galois group of the entry field") {
  // sigma_j fixes Q(zeta_k) when j = 1 mod k and acts on sqrt(m) by a sign;
  // so the exponent multiset must be stable under e -> j e for those j with
  // sigma_j(sqrt m) = sqrt m.
  for (const auto &e : catalog()) {
    const auto claim = certified_spectrum(e.matrix, default_bound(e.matrix.k()));
    REQUIRE(claim.has_value());
    const int L = std::lcm(std::lcm(e.matrix.k(), claim->K), sqrt_conductor(claim->m));
    const auto g = sqrt_embed(claim->m, L);
    for (int j = 1; j < L; ++j) {
      if (std::gcd(j, L) != 1 || j % e.matrix.k() != 1 % e.matrix.k())
        continue;
      // Apply sigma_j to g via its power-basis coefficients.
      CycloElement image = CycloElement::zero(L);
      for (int i = 0; i < g.degree(); ++i)
        image += CycloElement::root(L, static_cast<std::int64_t>(i) * j) * g.coeffs()[i];
      const int sign = image == g ? 1 : -1;
      CHECK((sign == 1 || image == -g));
      std::vector<int> moved;
      for (int x : claim->exponents)
        moved.push_back(mod_pos(static_cast<std::int64_t>(x) * j + (sign < 0 ? claim->K / 2 : 0),
                                claim->K));
      if (sign < 0 && claim->K % 2 != 0)
        continue;
      std::sort(moved.begin(), moved.end());
      CHECK(moved == claim->exponents);
    }
  }
}

TEST_CASE("unitary order is minimal") {
  for (const auto &e : catalog()) {
    const auto n = unitary_order(e.matrix, default_bound(e.matrix.k()));
    REQUIRE(n.has_value());
    const auto a = e.matrix.to_cyclo();
    for (int d = 1; d < *n; ++d)
      if (*n % d == 0) {
        const auto s = pow(a, d).scalar_value();
        if (!s)
          continue;
        // A scalar proper power must not be sqrt(m)^d.
        const int L = std::lcm(e.matrix.k(), sqrt_conductor(e.matrix.n()));
        auto g = sqrt_embed(e.matrix.n(), L), gd = g;
        for (int i = 1; i < d; ++i)
          gd *= g;
        CHECK_FALSE(s->embed(L) == gd);
      }
  }
}

TEST_CASE("SpectrumClaim helpers") {
  const SpectrumClaim c{2, 24, {21, 3}};
  CHECK(c.normalized() == SpectrumClaim{2, 8, {1, 7}});
  CHECK(c.primitive_only() == false);
  CHECK(SpectrumClaim{4, 6, {1, 1, 5, 5}}.support() == std::vector<int>{1, 5});
  CHECK(SpectrumClaim{4, 6, {1, 1, 5, 5}}.primitive_only());
  CHECK(default_bound(8) == 96);
  CHECK(default_bound(10) == 480);
}
