// butson: verify Butson matrices, analyze seeds and build morphisms.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "butson/catalog.hpp"
#include "butson/morphism.hpp"
#include "butson/search.hpp"

using namespace butson;
using nlohmann::json;

namespace {

constexpr const char *kVersion = "butson 0.1.0";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out || !(out << text))
    throw InputError("cannot write '" + path + "'");
}

ExponentGrid load_grid(const std::string &path) {
  try {
    return parse_grid(read_file(path));
  } catch (const ParseError &e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.what());
  }
}

ButsonMatrix load_matrix(const std::string &path) {
  auto grid = load_grid(path);
  if (auto m = ButsonMatrix::try_from(grid))
    return *m;
  throw InputError(path + " is not a Butson matrix");
}

ButsonMatrix load_seed_matrix(const std::string &ref) {
  if (auto e = find_entry(ref))
    return e->get().matrix;
  return load_matrix(ref);
}

int resolve_bound(int flag, int k) {
  if (flag > 0)
    return flag;
  if (const char *env = std::getenv("BUTSON_BOUND")) {
    try {
      const int b = std::stoi(env);
      if (b > 0)
        return b;
    } catch (const std::exception &) {
    }
    throw InputError("BUTSON_BOUND must be a positive integer");
  }
  return default_bound(k);
}

std::string join(const std::vector<int> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

std::string join(const std::set<int> &v) { return join(std::vector<int>(v.begin(), v.end())); }

json grid_json(const ExponentGrid &g) {
  json rows = json::array();
  for (int i = 0; i < g.n; ++i) {
    json row = json::array();
    for (int j = 0; j < g.n; ++j)
      row.push_back(g(i, j));
    rows.push_back(row);
  }
  return {{"n", g.n}, {"k", g.k}, {"exponents", rows}};
}

json root_json(const RootOfUnity &z) {
  const auto m = z.minimal();
  return {{"order", m.order()}, {"exponent", m.exponent()}};
}

json spectrum_json(const SpectrumClaim &s) {
  return {{"m", s.m}, {"K", s.K}, {"exponents", s.exponents}};
}

class JsonLines {
public:
  explicit JsonLines(std::string path) : path_(std::move(path)) {}
  void add(const json &record) {
    if (!path_.empty())
      text_ += record.dump() + "\n";
  }
  void flush() const {
    if (!path_.empty())
      write_file(path_, text_);
  }

private:
  std::string path_;
  std::string text_;
};

std::string spectrum_text(const SpectrumClaim &s) {
  return "sqrt(" + std::to_string(s.m) + ") * zeta_" + std::to_string(s.K) + "^" + join(s.exponents);
}

std::string domains_text(const std::vector<Progression> &domains) {
  if (domains.empty())
    return "none";
  std::string s;
  for (std::size_t i = 0; i < domains.size(); ++i)
    s += (i ? " " : "") + std::string("d=") + std::to_string(domains[i].d) + "@" +
         std::to_string(domains[i].offset);
  return s;
}

void print_seed(const MorphismSeed &seed) {
  const int K = seed.eigen_order();
  std::cout << "matrix: But(" << seed.degree() << "," << seed.matrix.k() << ")\n"
            << "spectrum: " << spectrum_text(seed.spectrum) << "\n"
            << "unitary order: " << K << "\n"
            << "T: " << join(seed.powers.T) << " (mod " << K << ")\n"
            << "complete domains: " << domains_text(complete_domain(seed.powers.T, K)) << "\n"
            << "output order: " << seed.effective_order() << "\n";
}

json seed_json(const MorphismSeed &seed) {
  json domains = json::array();
  for (const auto &p : complete_domain(seed.powers.T, seed.eigen_order()))
    domains.push_back({{"d", p.d}, {"offset", p.offset}});
  return {{"matrix", grid_json(seed.matrix.grid())},
          {"spectrum", spectrum_json(seed.spectrum)},
          {"unitary_order", seed.eigen_order()},
          {"T", seed.powers.T},
          {"complete_domains", domains},
          {"output_order", seed.effective_order()}};
}

MorphismSeed seed_or_fail(const ButsonMatrix &m, int bound) {
  try {
    return make_seed(m, bound);
  } catch (const std::runtime_error &e) {
    std::cout << "no finite eigenvalue order within bound " << bound << "\n";
    throw;
  }
}

RootOfUnity parse_scale(const std::string &text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      throw std::invalid_argument("missing '/'");
    const int e = std::stoi(text.substr(0, slash));
    const int k = std::stoi(text.substr(slash + 1));
    if (k < 1)
      throw std::invalid_argument("order must be positive");
    return RootOfUnity(k, e);
  } catch (const std::exception &) {
    throw InputError("--scale expects e/k, got '" + text + "'");
  }
}

SpectrumClaim parse_spectrum(const std::string &text, int m) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos)
      throw std::invalid_argument("missing ':'");
    SpectrumClaim s{m, std::stoi(text.substr(0, colon)), {}};
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ','))
      s.exponents.push_back(std::stoi(item));
    if (s.K < 1 || s.exponents.empty())
      throw std::invalid_argument("empty");
    return s;
  } catch (const std::exception &) {
    throw InputError("--spectrum expects K:e1,e2,..., got '" + text + "'");
  }
}

// Subcommands. Each returns the exit code.

int cmd_verify(const std::string &path) {
  const auto grid = load_grid(path);
  const auto v = verify_butson(grid);
  std::cout << "But(" << grid.n << "," << grid.k << "): ";
  if (v) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << "FAIL rows " << v.witness->first << "," << v.witness->second
            << " are not orthogonal\n";
  return 1;
}

int cmd_analyze(const std::string &ref, int bound_flag, const std::string &json_path) {
  const auto m = load_seed_matrix(ref);
  const int bound = resolve_bound(bound_flag, m.k());
  JsonLines out(json_path);
  try {
    const auto seed = seed_or_fail(m, bound);
    print_seed(seed);
    const auto probe = coprime_conjecture_probe(seed);
    if (probe.applicable)
      std::cout << "coprime residues in T: "
                << (probe.confirmed ? "yes" : "no, missing " + std::to_string(*probe.counterexample))
                << "\n";
    out.add(seed_json(seed));
    out.flush();
    return 0;
  } catch (const std::runtime_error &) {
    out.add({{"matrix", grid_json(m.grid())}, {"finite", false}, {"bound", bound}});
    out.flush();
    return 1;
  }
}

int cmd_morph(const std::string &seed_ref, const std::string &input, const std::string &scale,
              int bound_flag, const std::string &output, const std::string &json_path) {
  const auto seed_matrix = load_seed_matrix(seed_ref);
  ButsonMatrix h = load_matrix(input);
  if (!scale.empty())
    h = scale_by_root(h, parse_scale(scale));
  const auto seed = seed_or_fail(seed_matrix, resolve_bound(bound_flag, seed_matrix.k()));
  const int K = seed.eigen_order();
  if (h.k() % K != 0) {
    std::cout << "unsound: eigenvalue order " << K << " does not divide k=" << h.k() << "\n";
    return 1;
  }
  const auto report = check_sound(h, seed);
  std::cout << "X: " << join(report.X) << " (mod " << h.k() << ")\n"
            << "Y: " << join(report.Y) << " (mod " << h.k() << ")\n";
  if (!report.sound()) {
    const auto &v = *report.violation;
    std::cout << "unsound: " << to_string(v.condition) << ": " << v.message << "\n";
    return 1;
  }
  const auto result = apply_morphism(*report.pair);
  std::cout << "But(" << h.n() << "," << h.k() << ") -> But(" << result.n() << "," << result.k()
            << ")\n";
  if (output.empty())
    std::cout << serialize(result);
  else
    write_file(output, serialize(result));
  JsonLines out(json_path);
  out.add({{"input", grid_json(h.grid())},
           {"X", report.X},
           {"Y", report.Y},
           {"output", grid_json(result.grid())}});
  out.flush();
  return 0;
}

int cmd_twist(const std::string &seed_ref, int t, int bound_flag, const std::string &json_path) {
  const auto m = load_seed_matrix(seed_ref);
  const auto seed = seed_or_fail(m, resolve_bound(bound_flag, m.k()));
  MorphismSeed twisted = [&] {
    try {
      return twist(seed, t);
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
  }();
  print_seed(twisted);
  JsonLines out(json_path);
  out.add(seed_json(twisted));
  out.flush();
  return 0;
}

int cmd_classify2(int ell, int bound_flag, int jobs, const std::string &json_path) {
  const Classification c = [&] {
    try {
      return classify2(ell, resolve_bound(bound_flag, ell), jobs);
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
  }();
  std::map<std::string, int> templates;
  for (const auto &r : c.records)
    if (r.spectrum)
      ++templates[to_string(r.match.kind)];
  std::cout << "l = " << c.ell << ", bound " << c.bound << "\n"
            << "examined: " << c.examined << "\n"
            << "finite order: " << c.finite_count() << "\n";
  for (const auto &[name, count] : templates)
    std::cout << "  " << name << ": " << count << "\n";
  JsonLines out(json_path);
  for (const auto &r : c.records) {
    json rec{{"type", "record"},
             {"ell", c.ell},
             {"matrix", grid_json(r.matrix.grid())},
             {"finite", r.spectrum.has_value()},
             {"template", to_string(r.match.kind)}};
    if (r.match.kind != Template::None)
      rec["params"] = {{"a", r.match.a}, {"b", r.match.b}, {"swapped", r.match.swapped}};
    if (r.spectrum) {
      rec["spectrum"] = spectrum_json(*r.spectrum);
      rec["unitary_order"] = *r.unitary_order;
      rec["ratio"] = root_json(*r.ratio);
      rec["orders"] = {r.orders->first, r.orders->second};
    }
    out.add(rec);
  }
  for (const auto &f : c.findings) {
    const bool counter = f.kind == Finding::Kind::Counterexample;
    std::cout << (counter ? "COUNTEREXAMPLE " : "observation ") << f.rule;
    if (f.record >= 0)
      std::cout << " " << join(c.records[f.record].matrix.grid().exps);
    std::cout << ": " << f.message << "\n";
    out.add({{"type", counter ? "counterexample" : "observation"},
             {"rule", f.rule},
             {"record", f.record},
             {"message", f.message}});
  }
  std::cout << "counterexamples: " << c.counterexample_count() << "\n";
  out.flush();
  return c.counterexample_count() == 0 ? 0 : 1;
}

std::string root_name(const RootOfUnity &z) {
  const auto m = z.minimal();
  if (m.order() == 4 && m.exponent() == 1)
    return "i";
  return m.order() == 1 ? "1" : "zeta_" + std::to_string(m.order()) +
                                    (m.exponent() == 1 ? "" : "^" + std::to_string(m.exponent()));
}

int cmd_roots(int bound, const std::string &json_path) {
  if (bound < 1)
    throw InputError("--bound must be positive");
  const auto pairs = roots_brute_force(bound);
  JsonLines out(json_path);
  std::cout << "classes up to negation and conjugation, orders <= " << bound << ": "
            << pairs.size() << "\n";
  for (const auto &p : pairs) {
    std::cout << "[" << root_name(p.alpha) << ", " << root_name(p.lambda) << "]\n";
    out.add({{"alpha", root_json(p.alpha)}, {"lambda", root_json(p.lambda)}});
  }
  out.flush();
  return 0;
}

const CatalogEntry &entry_or_fail(const std::string &name) {
  if (auto e = find_entry(name))
    return e->get();
  throw InputError("unknown catalog entry '" + name + "'");
}

int print_report(const EntryReport &r) {
  std::cout << r.name << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto &c : r.results)
    std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.claim
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  return r.passed() ? 0 : 1;
}

int cmd_catalog(const std::string &action, const std::string &name, const std::string &output) {
  if (action == "list") {
    for (const auto &e : catalog())
      std::cout << e.name << "  But(" << e.matrix.n() << "," << e.matrix.k() << ")  " << e.source
                << "\n";
    return 0;
  }
  if (action == "show" || action == "export") {
    if (name.empty())
      throw InputError("catalog " + action + " needs an entry name");
    const auto &e = entry_or_fail(name);
    if (action == "export" && !output.empty()) {
      write_file(output, serialize(e.matrix));
      return 0;
    }
    if (action == "show") {
      std::cout << "# " << e.name << ": " << e.source << "\n";
      for (const auto &c : e.claims)
        std::cout << "# claim: " << describe(c) << "\n";
    }
    std::cout << serialize(e.matrix);
    return 0;
  }
  if (action == "verify") {
    int code = 0;
    if (!name.empty())
      return print_report(verify_entry(entry_or_fail(name)));
    for (const auto &r : verify_all())
      code = std::max(code, print_report(r));
    return code;
  }
  throw InputError("unknown catalog action '" + action + "'");
}

int cmd_search(int n, int ell, const std::string &spectrum, int m, long long budget, int jobs,
               const std::string &output) {
  const auto target = parse_spectrum(spectrum, m > 0 ? m : n);
  const SearchResult r = [&] {
    try {
      return spectrum_search(n, ell, target, budget, jobs);
    } catch (const std::invalid_argument &e) {
      throw InputError(e.what());
    }
  }();
  std::cout << "target: " << spectrum_text(target) << "\n"
            << "examined: " << r.examined << "\n";
  if (!r.matrix) {
    std::cout << "not found\n";
    return 1;
  }
  std::cout << "found:\n" << serialize(*r.matrix);
  if (!output.empty())
    write_file(output, serialize(*r.matrix));
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact construction and verification of Butson matrix morphisms"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string path, seed, input, scale, output, json_path, spectrum, action, name;
  int bound = 0, t = 0, ell = 0, jobs = 1, n = 0, m = 0;
  long long budget = 100000;

  auto *verify = app.add_subcommand("verify", "check that a matrix file is Butson");
  verify->add_option("file", path, "matrix file")->required();

  auto *analyze = app.add_subcommand("analyze", "certified spectrum, T and complete domains");
  analyze->add_option("seed", path, "catalog name or matrix file")->required();
  analyze->add_option("--bound", bound, "order bound");
  analyze->add_option("--json", json_path, "write a JSON Lines report");

  auto *morph = app.add_subcommand("morph", "apply a seed to a matrix");
  morph->add_option("--seed", seed, "catalog name or matrix file")->required();
  morph->add_option("--input", input, "matrix H")->required();
  morph->add_option("--scale", scale, "multiply H by zeta_k^e, given as e/k");
  morph->add_option("--bound", bound, "order bound");
  morph->add_option("-o,--output", output, "output matrix file");
  morph->add_option("--json", json_path, "write a JSON Lines report");

  auto *tw = app.add_subcommand("twist", "twist a seed by zeta_t");
  tw->add_option("--seed", seed, "catalog name or matrix file")->required();
  tw->add_option("-t", t, "twist order")->required();
  tw->add_option("--bound", bound, "order bound");
  tw->add_option("--json", json_path, "write a JSON Lines report");

  auto *cls = app.add_subcommand("classify2", "classify But(2, l)");
  cls->add_option("--ell", ell, "root order l")->required();
  cls->add_option("--bound", bound, "order bound");
  cls->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  cls->add_option("--json", json_path, "write one JSON record per matrix");

  auto *roots = app.add_subcommand("roots", "pairs with Re(alpha) = sqrt(2) Re(lambda)");
  roots->add_option("--bound", bound, "largest root order")->required();
  roots->add_option("--json", json_path, "write a JSON Lines report");

  auto *cat = app.add_subcommand("catalog", "built-in seeds");
  cat->add_option("action", action, "list, show, verify or export")->required();
  cat->add_option("name", name, "entry name");
  cat->add_option("-o,--output", output, "export destination");

  auto *search = app.add_subcommand("search", "find a matrix with a given spectrum");
  search->add_option("--n", n, "matrix order")->required();
  search->add_option("--ell", ell, "root order")->required();
  search->add_option("--spectrum", spectrum, "target K:e1,e2,...")->required();
  search->add_option("--m", m, "eigenvalue modulus squared (default n)");
  search->add_option("--budget", budget, "candidate matrices to examine");
  search->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("-o,--output", output, "write the matrix found");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify)
      return cmd_verify(path);
    if (*analyze)
      return cmd_analyze(path, bound, json_path);
    if (*morph)
      return cmd_morph(seed, input, scale, bound, output, json_path);
    if (*tw)
      return cmd_twist(seed, t, bound, json_path);
    if (*cls)
      return cmd_classify2(ell, bound, jobs, json_path);
    if (*roots)
      return cmd_roots(bound, json_path);
    if (*cat)
      return cmd_catalog(action, name, output);
    if (*search)
      return cmd_search(n, ell, spectrum, m, budget, jobs, output);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
