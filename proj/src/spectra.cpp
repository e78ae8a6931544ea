#include "butson/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace butson {

bool SpectrumClaim::primitive_only() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [&](int e) { return std::gcd(e, K) == 1; });
}

SpectrumClaim SpectrumClaim::normalized() const {
  int order = 1;
  for (int e : exponents)
    order = std::lcm(order, RootOfUnity(K, e).minimal_order());
  SpectrumClaim r{m, order, {}};
  for (int e : exponents)
    r.exponents.push_back(RootOfUnity(K, e).exponent_at(order));
  std::sort(r.exponents.begin(), r.exponents.end());
  return r;
}

std::vector<int> SpectrumClaim::support() const {
  std::vector<int> s = exponents;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string SpectrumClaim::to_string() const {
  std::ostringstream out;
  out << "sqrt(" << m << ") * zeta_" << K << "^{";
  for (std::size_t i = 0; i < exponents.size(); ++i)
    out << (i ? "," : "") << exponents[i];
  out << "}";
  return out.str();
}

std::optional<Fraction> reconstruct_fraction(double x, std::int64_t max_den, double tol) {
  std::int64_t h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  std::optional<Fraction> best;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(r);
    if (std::abs(a_real) > 1e15)
      break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t h = a * h1 + h2, k = a * k1 + k2;
    if (k > max_den)
      break;
    best = Fraction{h, k};
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const double frac = r - a_real;
    if (frac < 1e-15)
      break;
    r = 1.0 / frac;
  }
  if (!best || std::abs(x - static_cast<double>(best->num) / best->den) >= tol)
    return std::nullopt;
  return best;
}

int default_bound(int k) { return 4 * std::lcm(24, k); }

std::optional<SpectrumClaim> estimate_spectrum(const ButsonMatrix &m, int bound) {
  if (bound < 1)
    throw std::invalid_argument("estimate_spectrum: bound must be positive");
  // Eigenvalues of the normal matrix itself are well conditioned even when
  // repeated; companion-matrix roots of a repeated factor are not.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.to_numeric(), false);
  if (solver.info() != Eigen::Success)
    return std::nullopt;
  std::vector<Fraction> fracs;
  int K = 1;
  for (const auto &lambda : solver.eigenvalues()) {
    double turns = std::arg(lambda) / (2.0 * std::numbers::pi);
    if (turns < 0)
      turns += 1.0;
    const auto f = reconstruct_fraction(turns, bound, kArgumentTolerance);
    if (!f)
      return std::nullopt;
    fracs.push_back(*f);
    K = std::lcm(K, static_cast<int>(f->den));
  }
  SpectrumClaim claim{m.n(), K, {}};
  for (const auto &f : fracs)
    claim.exponents.push_back(mod_pos(f.num * (K / f.den), K));
  return claim.normalized();
}

bool certify_spectrum(const ButsonMatrix &m, const SpectrumClaim &claim) {
  if (static_cast<int>(claim.exponents.size()) != m.n())
    throw std::invalid_argument("certify_spectrum: claim has " +
                                std::to_string(claim.exponents.size()) + " eigenvalues, matrix order " +
                                std::to_string(m.n()));
  const int L = std::lcm(std::lcm(m.k(), claim.K), sqrt_conductor(claim.m));
  const CycloElement g = sqrt_embed(claim.m, L);
  std::vector<CycloElement> roots;
  for (int e : claim.exponents)
    roots.push_back(g.mul_root(static_cast<std::int64_t>(e) * (L / claim.K)));
  const CharPoly expected = poly_from_roots(roots, L);
  const CharPoly actual = char_poly(m.to_cyclo()).embed(L);
  return actual == expected;
}

std::optional<SpectrumClaim> certified_spectrum(const ButsonMatrix &m, int bound) {
  auto claim = estimate_spectrum(m, bound);
  if (!claim || !certify_spectrum(m, *claim))
    return std::nullopt;
  return claim;
}

std::optional<int> unitary_order(const ButsonMatrix &m, int bound) {
  if (bound < 1)
    throw std::invalid_argument("unitary_order: bound must be positive");
  const int L = std::lcm(m.k(), sqrt_conductor(m.n()));
  const CycloElement g = sqrt_embed(m.n(), L);
  const CycloMatrix a = m.to_cyclo(L);
  CycloMatrix power = a;
  CycloElement scale = g;
  for (int N = 1; N <= bound; ++N) {
    if (N > 1) {
      power = power * a;
      scale *= g;
    }
    if (const auto s = power.scalar_value(); s && *s == scale)
      return N;
  }
  return std::nullopt;
}

} // namespace butson
