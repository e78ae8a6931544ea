#include "butson/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace butson {

namespace {

Integer int_pow(int base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

// Recognizes every entry of p (already divided by its integer scale) as
// detector_scale * zeta^e. Returns the entries as roots of unity.
std::optional<std::vector<RootOfUnity>> recognize(const CycloMatrix &p, const Integer &divisor,
                                                  const RootDetector &detector) {
  std::vector<RootOfUnity> roots;
  roots.reserve(static_cast<std::size_t>(p.rows()) * p.cols());
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c) {
      auto q = p(r, c).divide_exact(divisor);
      if (!q)
        return std::nullopt;
      const CycloElement x = q->level() == detector.level() ? *q : q->embed(detector.level());
      const auto e = detector.find(x);
      if (!e)
        return std::nullopt;
      roots.emplace_back(detector.level(), *e);
    }
  return roots;
}

ButsonMatrix grid_from_roots(int n, const std::vector<RootOfUnity> &roots) {
  int order = 1;
  for (const auto &z : roots)
    order = std::lcm(order, z.minimal_order());
  std::vector<int> exps;
  exps.reserve(roots.size());
  for (const auto &z : roots)
    exps.push_back(z.exponent_at(order));
  return ButsonMatrix::from_grid(ExponentGrid(n, order, std::move(exps)));
}

} // namespace

PowerSet hadamard_power_set(const ButsonMatrix &m, int k) {
  if (k < 1)
    throw std::invalid_argument("hadamard_power_set: k must be positive");
  const int n = m.n();
  const int level = m.k();
  const int even_level = std::lcm(level, sqrt_conductor(n));
  const RootDetector odd_detector(CycloElement::integer(level, 1));
  const RootDetector even_detector(sqrt_embed(n, even_level));

  PowerSet result;
  result.window = k;
  const CycloMatrix a = m.to_cyclo();
  CycloMatrix power = a;
  for (int i = 1; i <= k; ++i) {
    if (i > 1)
      power = power * a;
    // sqrt(m)^{i-1} = m^{(i-1)/2} for odd i, sqrt(m) m^{(i-2)/2} for even i
    const bool odd = i % 2 == 1;
    const auto roots = odd ? recognize(power, int_pow(n, (i - 1) / 2), odd_detector)
                           : recognize(power, int_pow(n, (i - 2) / 2), even_detector);
    if (!roots)
      continue;
    const int residue = i % k;
    result.T.push_back(residue);
    result.images.emplace(residue, grid_from_roots(n, *roots));
  }
  std::sort(result.T.begin(), result.T.end());
  return result;
}

int MorphismSeed::effective_order() const {
  return output_order(std::set<int>(powers.T.begin(), powers.T.end()));
}

int MorphismSeed::output_order(const std::set<int> &residues) const {
  int order = 1;
  for (int r : residues)
    order = std::lcm(order, powers.root_order(r));
  return order;
}

MorphismSeed make_seed(const ButsonMatrix &m, int bound) {
  if (bound <= 0)
    bound = default_bound(m.k());
  auto spectrum = certified_spectrum(m, bound);
  if (!spectrum)
    throw std::runtime_error("make_seed: no certified finite-order spectrum within bound " +
                             std::to_string(bound));
  PowerSet powers = hadamard_power_set(m, spectrum->K);
  return MorphismSeed{m, *spectrum, std::move(powers)};
}

std::string to_string(SoundnessCondition c) {
  switch (c) {
  case SoundnessCondition::EntriesInX:
    return "entries of H in X";
  case SoundnessCondition::EigenvaluesInY:
    return "eigenvalues of the seed in Y";
  case SoundnessCondition::HadamardPowers:
    return "condition 1 (scaled powers of M are Butson)";
  case SoundnessCondition::EntrywisePowers:
    return "condition 2 (entrywise powers of H are Butson)";
  }
  return "?";
}

SoundnessReport check_sound(const ButsonMatrix &h, const MorphismSeed &seed,
                            std::optional<std::set<int>> X, std::optional<std::set<int>> Y) {
  const int k = h.k();
  const int K = seed.eigen_order();
  if (k % K != 0)
    throw std::invalid_argument("check_sound: eigenvalue order " + std::to_string(K) +
                                " does not divide the root order k=" + std::to_string(k));
  std::set<int> eigen;
  for (int e : seed.spectrum.exponents)
    eigen.insert(e * (k / K));

  SoundnessReport report;
  report.X = X ? *X : entry_set(h).exponents;
  report.Y = Y ? *Y : eigen;
  auto fail = [&](SoundnessCondition c, int e, std::optional<std::pair<int, int>> w,
                  std::string msg) {
    report.violation = SoundnessViolation{c, e, w, std::move(msg)};
    return report;
  };

  for (int e : entry_set(h).exponents)
    if (!report.X.count(e))
      return fail(SoundnessCondition::EntriesInX, e, std::nullopt,
                  "entry exponent " + std::to_string(e) + " of H is not in X");
  for (int e : eigen)
    if (!report.Y.count(e))
      return fail(SoundnessCondition::EigenvaluesInY, e, std::nullopt,
                  "eigenvalue exponent " + std::to_string(e) + " is not in Y");
  for (int x : report.X) {
    const int r = mod_pos(x, K);
    if (!seed.powers.contains(r))
      return fail(SoundnessCondition::HadamardPowers, x, std::nullopt,
                  std::to_string(x) + " in X but " + std::to_string(r) + " not in T (mod " +
                      std::to_string(K) + ")");
  }
  for (int y : report.Y) {
    const auto v = verify_butson(power_map(h, y));
    if (!v)
      return fail(SoundnessCondition::EntrywisePowers, y, v.witness,
                  "entrywise power " + std::to_string(y) + " of H is not Butson");
  }
  report.pair = SoundPair{h, seed, report.X, report.Y};
  return report;
}

ButsonMatrix apply_morphism(const SoundPair &pair) {
  const auto &h = pair.h;
  const auto &seed = pair.seed;
  const int K = seed.eigen_order();
  const int m = seed.degree();
  const int n = h.n();

  std::set<int> used;
  for (int e : h.grid().exps)
    used.insert(mod_pos(e, K));
  const int order = seed.output_order(used);

  const int size = m * n;
  std::vector<int> exps(static_cast<std::size_t>(size) * size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ButsonMatrix &block = seed.powers.images.at(mod_pos(h(i, j), K));
      const int r = order / block.k();
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          exps[(i * m + p) * size + j * m + q] = block(p, q) * r;
    }
  ExponentGrid grid(size, order, std::move(exps));
  if (const auto v = verify_butson(grid); !v)
    throw std::logic_error("apply_morphism: output failed verification at rows " +
                           std::to_string(v.witness->first) + "," +
                           std::to_string(v.witness->second));
  return ButsonMatrix::from_grid(std::move(grid));
}

std::vector<Progression> complete_domain(const std::vector<int> &T, int k) {
  if (k < 1)
    throw std::invalid_argument("complete_domain: k must be positive");
  std::set<int> members;
  for (int t : T)
    members.insert(mod_pos(t, k));

  std::vector<Progression> found;
  for (int d = k; d >= 1; --d) {
    if (k % d != 0)
      continue;
    const int step = k / d;
    for (int c = 0; c < step; ++c) {
      bool inside = true;
      for (int j = 0; j < d && inside; ++j)
        inside = members.count(c + j * step) > 0;
      if (!inside)
        continue;
      // A coset of step k/d sits inside a larger found coset of step k/d'
      // exactly when the offsets agree modulo k/d'.
      const bool covered = std::any_of(found.begin(), found.end(), [&](const Progression &p) {
        return p.d > d && p.d % d == 0 && c % (k / p.d) == p.offset;
      });
      if (!covered)
        found.push_back({d, c});
    }
  }
  return found;
}

int cor_d_formula(int k) {
  if (k < 1)
    throw std::invalid_argument("cor_d_formula: k must be positive");
  int d = 1;
  for (int p : prime_divisors(k)) {
    int pk = k;
    while (pk % (p * p) == 0) {
      d *= p;
      pk /= p;
    }
  }
  return d;
}

MorphismSeed twist(const MorphismSeed &seed, int t) {
  const int K = seed.eigen_order();
  if (t < 1 || std::gcd(t, K) != 1)
    throw std::invalid_argument("twist: t=" + std::to_string(t) +
                                " must be positive and coprime to the eigenvalue order " +
                                std::to_string(K));
  if (t == 1)
    return seed;
  const int Kt = K * t;
  ButsonMatrix scaled = scale_by_root(seed.matrix, RootOfUnity(t, 1));

  // zeta_t * sqrt(m) zeta_K^e = sqrt(m) zeta_{Kt}^{e t + K}
  SpectrumClaim spectrum{seed.spectrum.m, Kt, {}};
  for (int e : seed.spectrum.exponents)
    spectrum.exponents.push_back((e * t + K) % Kt);
  spectrum = spectrum.normalized();
  if (!certify_spectrum(scaled, spectrum))
    throw std::logic_error("twist: twisted spectrum failed certification");

  PowerSet powers = hadamard_power_set(scaled, spectrum.K);
  for (int a = 0; a < spectrum.K; ++a)
    if (seed.powers.contains(a % K) && !powers.contains(a))
      throw std::logic_error("twist: exponent " + std::to_string(a) +
                             " lifts an element of T but is missing from T'");
  return MorphismSeed{std::move(scaled), std::move(spectrum), std::move(powers)};
}

MorphismSeed tensor_lift(const ButsonMatrix &h, const MorphismSeed &seed) {
  const int K = seed.eigen_order();
  if (!is_hermitian(h))
    throw std::invalid_argument("tensor_lift: H is not Hermitian");
  if (K % 4 != 0 || !seed.spectrum.primitive_only())
    throw std::invalid_argument("tensor_lift: seed spectrum must be primitive with 4 | K");

  // H has eigenvalues +sqrt(n) (p times) and -sqrt(n) (q times);
  // trace = (p - q) sqrt(n) with integer trace.
  const int n = h.n();
  int trace = 0;
  for (int i = 0; i < n; ++i)
    trace += h(i, i) == 0 ? 1 : -1;
  int diff = -n - 1;
  for (int cand = -n; cand <= n; ++cand)
    if (cand * cand * n == trace * trace && (cand >= 0) == (trace >= 0)) {
      diff = cand;
      break;
    }
  if (diff < -n || (n + diff) % 2 != 0)
    throw std::logic_error("tensor_lift: Hermitian trace inconsistent with eigenvalues +-sqrt(n)");
  const int plus = (n + diff) / 2, minus = n - plus;

  ButsonMatrix product = kron(h, seed.matrix);
  SpectrumClaim spectrum{n * seed.spectrum.m, K, {}};
  for (int e : seed.spectrum.exponents) {
    for (int i = 0; i < plus; ++i)
      spectrum.exponents.push_back(e);
    for (int i = 0; i < minus; ++i)
      spectrum.exponents.push_back((e + K / 2) % K);
  }
  spectrum = spectrum.normalized();
  if (!certify_spectrum(product, spectrum))
    throw std::logic_error("tensor_lift: lifted spectrum failed certification");
  PowerSet powers = hadamard_power_set(product, spectrum.K);
  return MorphismSeed{std::move(product), std::move(spectrum), std::move(powers)};
}

CoprimeProbe coprime_conjecture_probe(const MorphismSeed &seed) {
  CoprimeProbe probe;
  probe.applicable = seed.spectrum.primitive_only();
  const int K = seed.eigen_order();
  for (int i = 1; i <= K; ++i)
    if (std::gcd(i, K) == 1)
      probe.coprime.push_back(i % K);
  if (!probe.applicable)
    return probe;
  for (int i : probe.coprime)
    if (!seed.powers.contains(i)) {
      probe.counterexample = i;
      return probe;
    }
  probe.confirmed = true;
  return probe;
}

} // namespace butson
