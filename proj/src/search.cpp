#include "butson/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace butson {

namespace {

void parallel_for(int count, int jobs, const std::function<void(int)> &body) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < std::min(jobs, count); ++w)
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++)
        body(i);
    });
  for (auto &t : workers)
    t.join();
}

int order_of(int exponent, int ell) { return RootOfUnity(ell, exponent).minimal_order(); }

// (alpha, beta, t) with l = 2^alpha 3^beta t; three_adic false keeps 3 in t.
struct Factored {
  int alpha = 0;
  int beta = 0;
  int t = 1;
};

Factored factor(int ell, bool three_adic) {
  Factored f;
  while (ell % 2 == 0) {
    ell /= 2;
    ++f.alpha;
  }
  while (three_adic && ell % 3 == 0) {
    ell /= 3;
    ++f.beta;
  }
  f.t = ell;
  return f;
}

std::string orders_text(const ClassRecord &r) {
  return "(" + std::to_string(r.orders->first) + ", " + std::to_string(r.orders->second) + ")";
}

ClassRecord classify_one(const ButsonMatrix &m, int bound) {
  ClassRecord r{m, certified_spectrum(m, bound), std::nullopt, std::nullopt, match_template(m),
                std::nullopt};
  if (r.spectrum) {
    const auto &s = *r.spectrum;
    r.unitary_order = s.K;
    r.ratio = RootOfUnity(s.K, s.exponents[0] - s.exponents[1]).minimal();
    r.orders = {order_of(s.exponents[0], s.K), order_of(s.exponents[1], s.K)};
  }
  return r;
}

void add_findings(Classification &c) {
  auto counter = [&](std::string rule, int idx, std::string msg) {
    c.findings.push_back({Finding::Kind::Counterexample, std::move(rule), idx, std::move(msg)});
  };
  auto observe = [&](std::string rule, int idx, std::string msg) {
    c.findings.push_back({Finding::Kind::Observation, std::move(rule), idx, std::move(msg)});
  };
  const int ell = c.ell;
  struct M2Tally {
    int records = 0;
    int above = 0;
    int same_despite = 0;
    bool claimed = false;
  };
  std::map<int, M2Tally> m2; // keyed by l_a
  int global_m1 = 0;
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    const auto &r = c.records[i];
    const int idx = static_cast<int>(i);
    if (!r.spectrum)
      continue;
    const int k = r.max_order();
    if (!ratio_allowed(*r.ratio))
      counter("ratio", idx, "eigenvalue ratio " + r.ratio->to_string() + " outside the corollary");
    if (k > ell && r.match.kind != Template::M1 && r.match.kind != Template::M2)
      counter("template", idx, "order " + std::to_string(k) + " > l without a template match");
    if (r.match.kind == Template::Traceless && k > ell)
      counter("traceless", idx, "traceless with order " + std::to_string(k) + " > l");
    const bool same = r.orders->first == r.orders->second;
    if (r.match.kind == Template::M1) {
      const int la = std::lcm(order_of(r.match.a, ell), 2);
      const auto f = factor(la, false);
      if (f.alpha <= 2 && !(r.orders->first == 8 * f.t && same))
        counter("M1", idx, "l_a = " + std::to_string(la) + ": orders " + orders_text(r) +
                               ", expected both " + std::to_string(8 * f.t));
      if (f.alpha == 3 && same)
        counter("M1", idx, "l_a = " + std::to_string(la) + ": orders " + orders_text(r) +
                               " should differ");
      if (f.alpha >= 4 && k > la)
        counter("M1", idx, "l_a = " + std::to_string(la) + ": order " + std::to_string(k) +
                               " exceeds l_a");
      const auto g = factor(ell, false);
      if (g.alpha <= 2 && !(r.orders->first == 8 * g.t && same))
        ++global_m1;
    }
    if (r.match.kind == Template::M2) {
      const int la = std::lcm(order_of(r.match.a, ell), 4);
      const auto f = factor(la, true);
      auto &tally = m2[la];
      ++tally.records;
      if (f.beta != 1 && f.alpha != 3 && !same)
        counter("M2", idx, "l_a = " + std::to_string(la) + ": orders " + orders_text(r) +
                               " should agree");
      if ((f.beta == 1 || f.alpha == 3) && same)
        ++tally.same_despite;
      if (f.beta <= 1 || f.alpha <= 3) {
        tally.claimed = true;
        if (k > la)
          ++tally.above;
      }
    }
  }
  for (const auto &[la, t] : m2) {
    const std::string head = "l_a = " + std::to_string(la) + ": ";
    if (t.claimed && t.above == 0)
      counter("M2-k>l", -1, head + "no M2 record has order above l_a");
    else if (t.claimed && t.above < t.records)
      observe("M2-k>l", -1,
              head + std::to_string(t.records - t.above) + " of " + std::to_string(t.records) +
                  " M2 records have order at most l_a");
    if (t.same_despite > 0)
      observe("M2-orders", -1,
              head + std::to_string(t.same_despite) + " of " + std::to_string(t.records) +
                  " M2 records have equal orders although beta = 1 or alpha = 3");
  }
  if (global_m1 > 0)
    observe("M1-global", -1,
            std::to_string(global_m1) + " M1 records miss order 8t when t is read from l = " +
                std::to_string(ell) + " instead of from a");
}

std::vector<std::int64_t> cyclo_coeffs(int ell) {
  std::vector<std::int64_t> out;
  for (const auto &c : cyclo_poly(ell))
    out.push_back(c.get_si());
  return out;
}

// Whether sum_j zeta_l^{d_j} vanishes, by reduction modulo Phi_l.
bool vanishes(const std::vector<int> &digits, int ell, const std::vector<std::int64_t> &phi) {
  std::vector<std::int64_t> c(ell, 0);
  for (int d : digits)
    ++c[d];
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int top = ell - 1; top >= deg; --top) {
    const std::int64_t q = c[top];
    if (q == 0)
      continue;
    for (int j = 0; j <= deg; ++j)
      c[top - deg + j] -= q * phi[j];
  }
  return std::all_of(c.begin(), c.begin() + deg, [](std::int64_t x) { return x == 0; });
}

class RowSearch {
public:
  RowSearch(int n, int ell, const SpectrumClaim &target) : n_(n), ell_(ell), target_(target) {
    rows_ = 1;
    for (int i = 0; i < n; ++i)
      rows_ *= ell;
    digits_.assign(static_cast<std::size_t>(rows_) * n, 0);
    for (int r = 0; r < rows_; ++r)
      for (int j = n - 1, v = r; j >= 0; --j, v /= ell)
        digits_[static_cast<std::size_t>(r) * n + j] = v % ell;
    const auto phi = cyclo_coeffs(ell);
    orthogonal_.assign(rows_, 0);
    std::vector<int> d(n);
    for (int r = 0; r < rows_; ++r) {
      for (int j = 0; j < n; ++j)
        d[j] = digit(r, j);
      orthogonal_[r] = vanishes(d, ell, phi);
    }
    for (int e = 0; e < ell; ++e)
      roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * e / ell));
    const double g = std::sqrt(static_cast<double>(target.m));
    for (int p = 1; p <= n; ++p) {
      std::complex<double> s = 0;
      for (int e : target.exponents)
        s += std::pow(g, p) * std::polar(1.0, 2.0 * std::numbers::pi * p * e / target.K);
      power_traces_.push_back(s);
    }
  }

  int rows() const { return rows_; }

  struct Branch {
    std::optional<ButsonMatrix> found;
    long long leaves = 0;
  };

  /// Explores every completion of first row r0, stopping at cap leaves.
  Branch explore(int r0, long long cap) const {
    Branch out;
    if (cap <= 0)
      return out;
    std::vector<int> chosen{r0};
    std::vector<std::vector<int>> candidates(n_);
    for (int r = 0; r < rows_; ++r)
      if (orth(r0, r))
        candidates[0].push_back(r);
    const std::complex<double> partial = roots_[digit(r0, 0)];
    if (n_ == 1) {
      leaf(chosen, out);
      return out;
    }
    descend(1, partial, chosen, candidates, cap, out);
    return out;
  }

private:
  int digit(int r, int j) const { return digits_[static_cast<std::size_t>(r) * n_ + j]; }

  bool orth(int a, int b) const {
    int idx = 0;
    for (int j = 0; j < n_; ++j)
      idx = idx * ell_ + (digit(a, j) - digit(b, j) + ell_) % ell_;
    return orthogonal_[idx] != 0;
  }

  bool descend(int depth, std::complex<double> partial, std::vector<int> &chosen,
               std::vector<std::vector<int>> &candidates, long long cap, Branch &out) const {
    for (int r : candidates[depth - 1]) {
      const std::complex<double> diag = partial + roots_[digit(r, depth)];
      if (std::abs(power_traces_[0] - diag) > (n_ - depth - 1) + 1e-9)
        continue;
      chosen.push_back(r);
      if (depth + 1 == n_) {
        const bool stop = leaf(chosen, out) || out.leaves >= cap;
        chosen.pop_back();
        if (stop)
          return true;
        continue;
      }
      auto &next = candidates[depth];
      next.clear();
      for (int s : candidates[depth - 1])
        if (s != r && orth(r, s))
          next.push_back(s);
      const bool stop = descend(depth + 1, diag, chosen, candidates, cap, out);
      chosen.pop_back();
      if (stop)
        return true;
    }
    return false;
  }

  bool leaf(const std::vector<int> &chosen, Branch &out) const {
    ++out.leaves;
    Eigen::MatrixXcd a(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        a(i, j) = roots_[digit(chosen[i], j)];
    Eigen::MatrixXcd power = a;
    for (int p = 0; p < n_; ++p) {
      if (p > 0)
        power = power * a;
      const double scale = std::pow(std::sqrt(static_cast<double>(target_.m)), p + 1) * n_;
      if (std::abs(power.trace() - power_traces_[p]) > 1e-7 * std::max(1.0, scale))
        return false;
    }
    std::vector<int> exps;
    for (int r : chosen)
      for (int j = 0; j < n_; ++j)
        exps.push_back(digit(r, j));
    auto m = ButsonMatrix::from_grid(ExponentGrid(n_, ell_, std::move(exps)));
    if (!certify_spectrum(m, target_))
      return false;
    out.found = std::move(m);
    return true;
  }

  int n_;
  int ell_;
  SpectrumClaim target_;
  int rows_;
  std::vector<int> digits_;
  std::vector<char> orthogonal_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> power_traces_;
};

} // namespace

void for_each_but2(int ell, const std::function<void(const ButsonMatrix &)> &f) {
  if (ell < 1)
    throw std::invalid_argument("for_each_but2: l must be positive");
  if (ell % 2 != 0)
    return;
  const int h = ell / 2;
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < ell; ++b)
      for (int d = 0; d < ell; ++d) {
        const int c = mod_pos(h - b + d + a, ell);
        f(ButsonMatrix::from_grid(ExponentGrid(2, ell, {a, b, c, d})));
      }
}

std::vector<ButsonMatrix> enumerate_but2(int ell) {
  std::vector<ButsonMatrix> out;
  for_each_but2(ell, [&](const ButsonMatrix &m) { out.push_back(m); });
  return out;
}

std::string to_string(Template t) {
  switch (t) {
  case Template::None:
    return "none";
  case Template::Traceless:
    return "traceless";
  case Template::M1:
    return "M1";
  case Template::M2:
    return "M2";
  }
  return "?";
}

TemplateMatch match_template(const ButsonMatrix &m) {
  if (m.n() != 2)
    throw std::invalid_argument("match_template: expected a 2x2 matrix");
  const int ell = m.k();
  const int h = ell / 2;
  const int m11 = m(0, 0), m12 = m(0, 1), m21 = m(1, 0), m22 = m(1, 1);
  const int b = mod_pos(m12 - m11, ell);
  if (m22 == mod_pos(m11 + h, ell))
    return {Template::Traceless, m11, b, false};
  if (m22 == m11 && m21 == mod_pos(h + m11 - b, ell))
    return {Template::M1, m11, b, false};
  if (ell % 4 == 0) {
    const int q = ell / 4;
    if (m22 == mod_pos(m11 + q, ell) && m21 == mod_pos(h + q + m11 - b, ell))
      return {Template::M2, m11, b, false};
    const int bs = mod_pos(m21 - m22, ell);
    if (m11 == mod_pos(m22 + q, ell) && m12 == mod_pos(h + q + m22 - bs, ell))
      return {Template::M2, m22, bs, true};
  }
  return {};
}

bool ratio_allowed(const RootOfUnity &ratio) {
  const int o = ratio.minimal_order();
  return o == 2 || o == 3 || o == 4 || o == 6;
}

std::size_t Classification::finite_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](const auto &r) { return r.spectrum.has_value(); }));
}

std::size_t Classification::counterexample_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const auto &f) {
    return f.kind == Finding::Kind::Counterexample;
  }));
}

Classification classify2(int ell, int bound, int jobs, int cap) {
  if (ell < 2 || ell % 2 != 0)
    throw std::invalid_argument("classify2: l must be even and positive");
  if (ell > cap)
    throw std::invalid_argument("classify2: l = " + std::to_string(ell) + " exceeds the cap " +
                                std::to_string(cap));
  Classification c;
  c.ell = ell;
  c.bound = bound > 0 ? bound : default_bound(ell);
  std::vector<std::vector<ClassRecord>> parts(ell);
  const int h = ell / 2;
  parallel_for(ell, jobs, [&](int a) {
    for (int b = 0; b < ell; ++b)
      for (int d = 0; d < ell; ++d) {
        const int cc = mod_pos(h - b + d + a, ell);
        parts[a].push_back(
            classify_one(ButsonMatrix::from_grid(ExponentGrid(2, ell, {a, b, cc, d})), c.bound));
      }
  });
  for (auto &p : parts)
    for (auto &r : p)
      c.records.push_back(std::move(r));
  c.examined = c.records.size();
  add_findings(c);
  return c;
}

bool certify_root_pair(const RootPair &p) {
  const int L = std::lcm(std::lcm(p.alpha.order(), p.lambda.order()), 8);
  const int ea = p.alpha.exponent_at(L), el = p.lambda.exponent_at(L);
  const CycloElement lhs = CycloElement::root(L, ea) + CycloElement::root(L, -ea);
  const CycloElement rhs =
      sqrt_embed(2, L) * (CycloElement::root(L, el) + CycloElement::root(L, -el));
  return lhs == rhs;
}

RootOfUnity canonical_root(const RootOfUnity &z) {
  const RootOfUnity m = z.minimal();
  const int n = m.order();
  // Argument in units of 1 / (4n) turns, reduced modulo a half turn.
  int f = mod_pos(4LL * m.exponent(), 2 * n);
  if (f > n)
    f = 2 * n - f;
  return RootOfUnity(4 * n, f).minimal();
}

std::vector<RootPair> roots_brute_force(int bound) {
  if (bound < 1)
    throw std::invalid_argument("roots_brute_force: bound must be positive");
  std::vector<RootOfUnity> roots;
  for (int n = 1; n <= bound; ++n)
    for (int e = 0; e < n; ++e)
      if (std::gcd(e, n) == 1)
        roots.emplace_back(n, e);
  auto turns = [](const RootOfUnity &z) {
    return 2.0 * std::numbers::pi * z.exponent() / z.order();
  };
  std::vector<std::pair<double, std::size_t>> scaled;
  for (std::size_t i = 0; i < roots.size(); ++i)
    scaled.emplace_back(std::sqrt(2.0) * std::cos(turns(roots[i])), i);
  std::sort(scaled.begin(), scaled.end());
  constexpr double tol = 1e-12;
  auto less = [](const RootPair &x, const RootPair &y) {
    auto key = [](const RootOfUnity &z) { return std::pair(z.exponent(), z.order()); };
    const auto cmp = [](std::pair<int, int> u, std::pair<int, int> v) {
      const long long l = 1LL * u.first * v.second, r = 1LL * v.first * u.second;
      return l < r ? -1 : (l > r ? 1 : 0);
    };
    const int c = cmp(key(x.alpha), key(y.alpha));
    return c != 0 ? c < 0 : cmp(key(x.lambda), key(y.lambda)) < 0;
  };
  std::set<RootPair, decltype(less)> classes(less);
  for (const auto &alpha : roots) {
    const double x = std::cos(turns(alpha));
    auto it = std::lower_bound(scaled.begin(), scaled.end(), std::pair(x - tol, std::size_t{0}));
    for (; it != scaled.end() && it->first <= x + tol; ++it) {
      const RootPair raw{alpha, roots[it->second]};
      if (!certify_root_pair(raw))
        continue;
      classes.insert({canonical_root(raw.alpha), canonical_root(raw.lambda)});
    }
  }
  return {classes.begin(), classes.end()};
}

SearchResult spectrum_search(int n, int ell, const SpectrumClaim &target, long long budget,
                             int jobs) {
  if (n < 1 || n > kSearchMaxOrder)
    throw std::invalid_argument("spectrum_search: n must lie in 1.." +
                                std::to_string(kSearchMaxOrder));
  if (ell < 1)
    throw std::invalid_argument("spectrum_search: l must be positive");
  if (static_cast<int>(target.exponents.size()) != n)
    throw std::invalid_argument("spectrum_search: target needs exactly n eigenvalues");
  if (std::pow(static_cast<double>(ell), n) > 1 << 24)
    throw std::invalid_argument("spectrum_search: l^n too large");
  SearchResult result;
  if (budget <= 0)
    return result;
  const RowSearch search(n, ell, target);
  const int branches = search.rows();
  if (jobs <= 1) {
    for (int r0 = 0; r0 < branches && result.examined < budget; ++r0) {
      auto b = search.explore(r0, budget - result.examined);
      result.examined += b.leaves;
      if (b.found) {
        result.matrix = std::move(b.found);
        break;
      }
    }
    return result;
  }
  std::vector<std::optional<RowSearch::Branch>> done(branches);
  std::atomic<int> first_found{branches};
  parallel_for(branches, jobs, [&](int r0) {
    if (r0 > first_found.load())
      return;
    done[r0] = search.explore(r0, budget);
    if (done[r0]->found) {
      int cur = first_found.load();
      while (r0 < cur && !first_found.compare_exchange_weak(cur, r0)) {
      }
    }
  });
  for (int r0 = 0; r0 < branches && result.examined < budget; ++r0) {
    if (!done[r0])
      break;
    auto &b = *done[r0];
    const long long remaining = budget - result.examined;
    if (b.found && b.leaves <= remaining) {
      result.examined += b.leaves;
      result.matrix = std::move(b.found);
      break;
    }
    result.examined += std::min(b.leaves, remaining);
  }
  return result;
}

} // namespace butson
