#include <doctest.h>

#include <set>

#include "butson/search.hpp"
#include "oracles.hpp"

using namespace butson;
using oracle::cat;

namespace {

const ClassRecord *find_record(const Classification &c, const ExponentGrid &g) {
  for (const auto &r : c.records)
    if (r.matrix.grid() == g)
      return &r;
  return nullptr;
}

std::set<std::pair<int, int>> as_angles(const std::vector<RootPair> &pairs) {
  std::set<std::pair<int, int>> out;
  for (const auto &p : pairs)
    out.insert({p.alpha.exponent() * (120 / p.alpha.order()),
                p.lambda.exponent() * (120 / p.lambda.order())});
  return out;
}

} // namespace

TEST_CASE("enumerate_but2") {
  CHECK(enumerate_but2(2).size() == 8);
  CHECK(enumerate_but2(4).size() == 64);
  CHECK(enumerate_but2(3).empty());
  CHECK(enumerate_but2(5).empty());
  for (int ell : {2, 4, 6, 8, 12}) {
    const auto all = enumerate_but2(ell);
    CHECK(all.size() == static_cast<std::size_t>(ell * ell * ell));
    std::set<std::vector<int>> distinct;
    for (const auto &m : all) {
      CHECK(verify_butson(m.grid()));
      distinct.insert(m.grid().exps);
    }
    CHECK(distinct.size() == all.size());
  }
  // Brute force over all ell^4 grids finds the same set.
  for (int ell : {2, 3, 4, 6}) {
    std::size_t count = 0;
    for (int a = 0; a < ell; ++a)
      for (int b = 0; b < ell; ++b)
        for (int c = 0; c < ell; ++c)
          for (int d = 0; d < ell; ++d)
            count += oracle::numeric_butson(ExponentGrid(2, ell, {a, b, c, d}));
    CHECK(count == enumerate_but2(ell).size());
  }
}

TEST_CASE("template matching") {
  CHECK(match_template(cat("M8")).kind == Template::M1);
  const auto m24 = match_template(cat("M24"));
  CHECK(m24.kind == Template::M2);
  CHECK(m24.a == 0);
  CHECK(m24.b == 0);
  CHECK_FALSE(m24.swapped);
  const auto swapped = match_template(oracle::grid(4, {{1, 3}, {0, 0}}));
  CHECK(swapped.kind == Template::M2);
  CHECK(swapped.swapped);
  CHECK(match_template(fourier(2)).kind == Template::Traceless);
}

TEST_CASE("ratio set") {
  CHECK(ratio_allowed(RootOfUnity(2, 1)));
  CHECK(ratio_allowed(RootOfUnity(4, 3)));
  CHECK(ratio_allowed(RootOfUnity(3, 1)));
  CHECK(ratio_allowed(RootOfUnity(6, 5)));
  CHECK(ratio_allowed(RootOfUnity(3, 2)));
  CHECK_FALSE(ratio_allowed(RootOfUnity(8, 1)));
  CHECK_FALSE(ratio_allowed(RootOfUnity(1, 0)));
}

TEST_CASE("classify2 examples") {
  const auto c2 = classify2(2);
  CHECK(c2.examined == 8);
  for (const auto &r : c2.records) {
    if (!r.spectrum)
      continue;
    CHECK(r.ratio->minimal_order() % 2 == 0);
    CHECK(r.ratio->minimal_order() != 6);
    if (r.match.kind == Template::M1)
      CHECK(r.orders == std::pair{8, 8});
  }

  const auto c4 = classify2(4);
  const auto *m24 = find_record(c4, cat("M24").grid());
  REQUIRE(m24 != nullptr);
  CHECK(m24->match.kind == Template::M2);
  CHECK(m24->orders == std::pair{24, 24});

  const auto c8 = classify2(8);
  int primitive_a = 0;
  for (const auto &r : c8.records)
    if (r.spectrum && r.match.kind == Template::M1 && r.match.a % 2 == 1) {
      ++primitive_a;
      CHECK(r.orders->first != r.orders->second);
      // One eigenvalue real, the other purely imaginary.
      const std::set<int> o{r.orders->first, r.orders->second};
      CHECK(o.count(4) == 1);
      CHECK((o.count(1) + o.count(2)) == 1);
    }
  CHECK(primitive_a > 0);
}

TEST_CASE("classify2 invariants") {
  for (int ell : {2, 4, 6, 8, 10, 12}) {
    const auto c = classify2(ell);
    CAPTURE(ell);
    CHECK(c.examined == static_cast<std::size_t>(ell * ell * ell));
    for (const auto &f : c.findings) {
      CAPTURE(f.message);
      CHECK(f.kind == Finding::Kind::Observation);
    }
    for (const auto &r : c.records) {
      if (!r.spectrum)
        continue;
      CHECK(ratio_allowed(*r.ratio));
      CHECK(certify_spectrum(r.matrix, *r.spectrum));
      CHECK(r.unitary_order == unitary_order(r.matrix, default_bound(ell)));
      if (r.max_order() > ell)
        CHECK((r.match.kind == Template::M1 || r.match.kind == Template::M2));
      if (r.match.kind == Template::Traceless)
        CHECK(r.max_order() <= ell);
    }
  }
}

TEST_CASE("classify2 at l = 2 mod 4: M1 orders are 8t for t read from a") {
  for (int ell : {2, 6, 10}) {
    for (const auto &r : classify2(ell).records) {
      if (!r.spectrum || r.match.kind != Template::M1)
        continue;
      const int order_a = RootOfUnity(ell, r.match.a).minimal_order();
      const int t = std::lcm(order_a, 2) / 2;
      CHECK(r.orders == std::pair{8 * t, 8 * t});
    }
  }
}

TEST_CASE("classify2 reports the M2 order statement as written") {
  const auto c = classify2(24);
  bool counterexample = false;
  for (const auto &f : c.findings)
    counterexample = counterexample || (f.kind == Finding::Kind::Counterexample && f.rule == "M2-k>l");
  CHECK(counterexample);
}

TEST_CASE("classify2 is independent of the worker count") {
  const auto a = classify2(12, 0, 1);
  const auto b = classify2(12, 0, 4);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].matrix == b.records[i].matrix);
    CHECK(a.records[i].spectrum == b.records[i].spectrum);
  }
  CHECK(a.findings.size() == b.findings.size());
}

TEST_CASE("classify2 preconditions") {
  CHECK_THROWS_AS(classify2(3), std::invalid_argument);
  CHECK_THROWS_AS(classify2(26), std::invalid_argument);
  CHECK_NOTHROW(classify2(26, 0, 1, 26));
}

TEST_CASE("canonical roots") {
  CHECK(canonical_root(RootOfUnity(4, 3)) == RootOfUnity(4, 1));
  CHECK(canonical_root(RootOfUnity(2, 1)) == RootOfUnity(1, 0));
  CHECK(canonical_root(RootOfUnity(8, 3)) == RootOfUnity(8, 1));
  CHECK(canonical_root(RootOfUnity(6, 2)) == RootOfUnity(6, 1));
  CHECK(canonical_root(RootOfUnity(6, 5)) == RootOfUnity(6, 1));
}

TEST_CASE("roots_brute_force") {
  const std::set<std::pair<int, int>> three{{30, 30}, {0, 15}, {15, 20}};
  CHECK(as_angles(roots_brute_force(24)) == three);
  CHECK(as_angles(roots_brute_force(4)) == std::set<std::pair<int, int>>{{30, 30}});
  CHECK(as_angles(roots_brute_force(120)) == three);
  for (int b = 8; b <= 60; b += 4)
    CHECK(as_angles(roots_brute_force(b)) == three);
  for (const auto &p : roots_brute_force(120))
    CHECK(certify_root_pair(p));
  CHECK_FALSE(certify_root_pair({RootOfUnity(8, 1), RootOfUnity(8, 1)}));
}

TEST_CASE("spectrum_search") {
  const auto m5 = spectrum_search(4, 4, {4, 5, {1, 2, 3, 4}}, 100000);
  REQUIRE(m5.matrix.has_value());
  CHECK(certify_spectrum(*m5.matrix, {4, 5, {1, 2, 3, 4}}));

  const auto m8 = spectrum_search(2, 2, {2, 8, {1, 7}}, 100);
  REQUIRE(m8.matrix.has_value());
  CHECK(certify_spectrum(*m8.matrix, {2, 8, {1, 7}}));

  const auto none = spectrum_search(2, 2, {2, 5, {1, 4}}, 1000);
  CHECK_FALSE(none.matrix.has_value());
  CHECK(none.examined <= 8);

  const auto starved = spectrum_search(4, 4, {4, 5, {1, 2, 3, 4}}, 10);
  CHECK_FALSE(starved.matrix.has_value());
  CHECK(starved.examined == 10);

  CHECK_THROWS_AS(spectrum_search(7, 2, {7, 1, {0, 0, 0, 0, 0, 0, 0}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_search(2, 2, {2, 8, {1}}, 1), std::invalid_argument);
}

TEST_CASE("spectrum_search is independent of the worker count") {
  for (long long budget : {10LL, 500LL, 1500LL, 100000LL}) {
    const auto a = spectrum_search(4, 4, {4, 5, {1, 2, 3, 4}}, budget, 1);
    const auto b = spectrum_search(4, 4, {4, 5, {1, 2, 3, 4}}, budget, 4);
    CHECK(a.examined == b.examined);
    CHECK(a.matrix == b.matrix);
  }
  const auto a = spectrum_search(4, 6, {4, 6, {1, 1, 5, 5}}, 5000, 1);
  const auto b = spectrum_search(4, 6, {4, 6, {1, 1, 5, 5}}, 5000, 3);
  CHECK(a.examined == b.examined);
  CHECK(a.matrix == b.matrix);
}
