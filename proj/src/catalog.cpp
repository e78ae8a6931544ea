#include "butson/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace butson {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<int> &v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

std::vector<int> non_multiples(int k, int of) {
  std::vector<int> r;
  for (int i = 1; i < k; ++i)
    if (i % of != 0)
      r.push_back(i);
  return r;
}

std::vector<CatalogEntry> build_catalog() {
  using claim::Butson, claim::Spectrum, claim::PowerSet, claim::ScalarPower, claim::PowerImage,
      claim::UnitaryOrder, claim::CompleteDomain, claim::Signature;
  std::vector<CatalogEntry> entries;

  entries.push_back({"M8",
                     ButsonMatrix::from_grid(ExponentGrid(2, {{0, 0}, {1, 0}})),
                     {Butson{}, Spectrum{{2, 8, {1, 7}}}, PowerSet{{1, 3, 5, 7}, true},
                      ScalarPower{8, 16}, PowerImage{3, ExponentGrid(2, {{1, 0}, {1, 1}})},
                      PowerImage{5, ExponentGrid(2, {{1, 1}, {0, 1}})}, UnitaryOrder{{}, 8},
                      CompleteDomain{4}, Signature{true, 4, 2, 2}},
                     "Turyn"});

  entries.push_back(
      {"M6",
       ButsonMatrix::from_grid(
           ExponentGrid(2, {{0, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}})),
       {Butson{}, Spectrum{{4, 6, {1, 1, 5, 5}}}, ScalarPower{3, -8},
        PowerSet{{1, 2, 4, 5}, true}, UnitaryOrder{{}, 6}, Signature{false, 6, 4, 2}},
       "Compton-Craigen-de Launey (up to similarity)"});

  entries.push_back(
      {"M5",
       ButsonMatrix::from_grid(
           ExponentGrid(4, {{2, 2, 2, 2}, {0, 2, 0, 2}, {1, 1, 3, 3}, {1, 3, 3, 1}})),
       {Butson{}, Spectrum{{4, 5, {1, 2, 3, 4}}}, PowerSet{{1, 2, 3, 4}, false},
        UnitaryOrder{{}, 5}, Signature{false, 5, 4, 4}},
       "computer search, primitive fifth roots"});

  entries.push_back(
      {"K12",
       ButsonMatrix::from_grid(
           ExponentGrid(2, {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}})),
       {Butson{}, Spectrum{{4, 12, {1, 5, 7, 11}}}, UnitaryOrder{{}, 12},
        PowerSet{{1, 2, 4, 5, 7, 8, 10, 11}, true}, ScalarPower{6, -64},
        ScalarPower{12, 4096}, Signature{false, 12, 4, 2}},
       "order-12 seed, cleared of its 1/2 normalization"});

  entries.push_back({"M24",
                     ButsonMatrix::from_grid(ExponentGrid(4, {{0, 0}, {3, 1}})),
                     {Butson{}, Spectrum{{2, 24, {7, 23}}}, PowerSet{non_multiples(24, 3), true},
                      PowerImage{2, ExponentGrid(8, {{7, 1}, {7, 5}})}, CompleteDomain{8},
                      Signature{true, 8, 2, 8}},
                     "second 2x2 template with a = b = 1"});

  entries.push_back({"GOW2",
                     ButsonMatrix::from_grid(ExponentGrid(4, {{2, 1}, {0, 1}})),
                     {Butson{}, UnitaryOrder{RootOfUnity(8, 1), 3}},
                     "Gow, smallest case"});
  return entries;
}

ClaimResult check(const CatalogEntry &entry, const Claim &c,
                  const std::optional<MorphismSeed> &seed) {
  auto need_seed = [&]() -> const MorphismSeed & {
    if (!seed)
      throw std::runtime_error("no certified seed");
    return *seed;
  };
  const ButsonMatrix &m = entry.matrix;
  ClaimResult r{describe(c), false, ""};
  try {
    std::visit(
        overloaded{
            [&](const claim::Butson &) { r.passed = static_cast<bool>(verify_butson(m.grid())); },
            [&](const claim::Spectrum &s) { r.passed = certify_spectrum(m, s.spectrum); },
            [&](const claim::PowerSet &p) {
              const auto &T = need_seed().powers.T;
              r.passed = p.exact ? T == p.residues
                                 : std::includes(T.begin(), T.end(), p.residues.begin(),
                                                 p.residues.end());
              if (!r.passed || !p.exact)
                r.detail = "T = " + join(T);
            },
            [&](const claim::ScalarPower &s) {
              const auto power = pow(m.to_cyclo(), s.power);
              const auto value = power.scalar_value();
              const auto as_int = value ? value->as_integer() : std::nullopt;
              r.passed = as_int && *as_int == s.scalar;
              if (!r.passed)
                r.detail = value ? "scalar " + value->to_string() : "not scalar";
            },
            [&](const claim::PowerImage &p) {
              const auto &powers = need_seed().powers;
              const int residue = p.power % powers.window;
              r.passed = powers.contains(residue) &&
                         powers.images.at(residue).grid() == p.expected;
            },
            [&](const claim::UnitaryOrder &u) {
              const ButsonMatrix target = u.prescale ? scale_by_root(m, *u.prescale) : m;
              const auto N = unitary_order(target, default_bound(target.k()));
              r.passed = N && *N == u.order;
              r.detail = N ? "order " + std::to_string(*N) : "no finite order within bound";
            },
            [&](const claim::CompleteDomain &d) {
              const auto &s = need_seed();
              const auto domains = complete_domain(s.powers.T, s.eigen_order());
              r.passed = !domains.empty() && domains.front().d == d.d;
              if (!domains.empty())
                r.detail = "largest d = " + std::to_string(domains.front().d);
            },
            [&](const claim::Signature &sig) {
              const auto &s = need_seed();
              const int K = s.eigen_order();
              if (s.degree() != sig.degree)
                return;
              if (!sig.complete) {
                const int out = s.effective_order();
                r.detail = "output order " + std::to_string(out);
                r.passed = K == sig.domain && out == sig.output;
                return;
              }
              for (const auto &p : complete_domain(s.powers.T, K)) {
                if (p.d % sig.domain != 0)
                  continue;
                std::set<int> coset;
                for (int j = 0; j < sig.domain; ++j)
                  coset.insert((p.offset + j * (K / sig.domain)) % K);
                const int out = s.output_order(coset);
                r.detail = "offset " + std::to_string(p.offset) + ", output order " +
                           std::to_string(out);
                r.passed = out == sig.output;
                return;
              }
            },
        },
        c);
  } catch (const std::exception &e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

} // namespace

std::string describe(const Claim &c) {
  return std::visit(
      overloaded{
          [](const claim::Butson &) { return std::string("Butson"); },
          [](const claim::Spectrum &s) { return "spectrum " + s.spectrum.to_string(); },
          [](const claim::PowerSet &p) {
            return std::string(p.exact ? "T = " : "T contains ") + join(p.residues);
          },
          [](const claim::ScalarPower &s) {
            return "M^" + std::to_string(s.power) + " = " + std::to_string(s.scalar) + " I";
          },
          [](const claim::PowerImage &p) {
            return "sqrt(m)^{1-" + std::to_string(p.power) + "} M^" + std::to_string(p.power) +
                   " = grid at k=" + std::to_string(p.expected.k);
          },
          [](const claim::UnitaryOrder &u) {
            return std::string("unitary order") +
                   (u.prescale ? " of " + u.prescale->to_string() + "*M" : "") + " = " +
                   std::to_string(u.order);
          },
          [](const claim::CompleteDomain &d) {
            return "complete domain d = " + std::to_string(d.d);
          },
          [](const claim::Signature &s) {
            return std::string(s.complete ? "complete" : "partial") + " morphism But(n," +
                   std::to_string(s.domain) + ") -> But(" + std::to_string(s.degree) + "n," +
                   std::to_string(s.output) + ")";
          },
      },
      c);
}

bool EntryReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed; });
}

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<std::reference_wrapper<const CatalogEntry>> find_entry(std::string_view name) {
  for (const auto &e : catalog())
    if (e.name == name)
      return std::cref(e);
  return std::nullopt;
}

const CatalogEntry &get(std::string_view name) {
  if (auto e = find_entry(name))
    return e->get();
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

EntryReport verify_entry(const CatalogEntry &entry) {
  const bool wants_seed = std::any_of(entry.claims.begin(), entry.claims.end(), [](const auto &c) {
    return std::holds_alternative<claim::PowerSet>(c) ||
           std::holds_alternative<claim::PowerImage>(c) ||
           std::holds_alternative<claim::CompleteDomain>(c) ||
           std::holds_alternative<claim::Signature>(c);
  });
  std::optional<MorphismSeed> seed;
  if (wants_seed) {
    try {
      seed = make_seed(entry.matrix);
    } catch (const std::exception &) {
    }
  }
  EntryReport report{entry.name, {}};
  for (const auto &c : entry.claims)
    report.results.push_back(check(entry, c, seed));
  return report;
}

std::vector<EntryReport> verify_all() {
  std::vector<EntryReport> reports;
  for (const auto &e : catalog())
    reports.push_back(verify_entry(e));
  return reports;
}

} // namespace butson
