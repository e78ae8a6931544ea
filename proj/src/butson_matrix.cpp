#include "butson/butson_matrix.hpp"

#include <numbers>
#include <numeric>

namespace butson {

ExponentGrid::ExponentGrid(int n, int k, std::vector<int> exps) : n(n), k(k), exps(std::move(exps)) {}

ExponentGrid::ExponentGrid(int k, std::initializer_list<std::initializer_list<int>> rows)
    : n(static_cast<int>(rows.size())), k(k) {
  for (const auto &row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("ExponentGrid: rows must have length n");
    for (int e : row)
      exps.push_back(mod_pos(e, k));
  }
}

void ExponentGrid::validate() const {
  if (n < 1 || k < 1)
    throw std::invalid_argument("ExponentGrid: n and k must be positive");
  if (exps.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("ExponentGrid: expected " + std::to_string(n * n) + " entries");
  for (int e : exps)
    if (e < 0 || e >= k)
      throw std::invalid_argument("ExponentGrid: exponent " + std::to_string(e) +
                                  " out of range for k=" + std::to_string(k));
}

VerifyResult verify_butson(const ExponentGrid &grid) {
  grid.validate();
  const int n = grid.n, k = grid.k;
  std::vector<int> counts(k);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int c = 0; c < n; ++c)
        ++counts[mod_pos(grid(i, c) - grid(j, c), k)];
      const auto inner = CycloElement::root_sum(k, counts);
      const bool ok = i == j ? inner == CycloElement::integer(k, n) : inner.is_zero();
      if (!ok)
        return {false, std::pair{i, j}};
    }
  return {true, std::nullopt};
}

NotButsonError::NotButsonError(const ExponentGrid &grid, std::pair<int, int> witness)
    : std::runtime_error("not in But(" + std::to_string(grid.n) + "," + std::to_string(grid.k) +
                         "): rows " + std::to_string(witness.first) + " and " +
                         std::to_string(witness.second) + " are not orthogonal"),
      witness_(witness) {}

ButsonMatrix ButsonMatrix::from_grid(ExponentGrid grid) {
  const auto result = verify_butson(grid);
  if (!result)
    throw NotButsonError(grid, *result.witness);
  return ButsonMatrix(std::move(grid));
}

std::optional<ButsonMatrix> ButsonMatrix::try_from(ExponentGrid grid) {
  if (!verify_butson(grid))
    return std::nullopt;
  return ButsonMatrix(std::move(grid));
}

CycloMatrix ButsonMatrix::to_cyclo(int level) const {
  if (level % k() != 0)
    throw std::invalid_argument("ButsonMatrix::to_cyclo: level must be a multiple of k");
  const int r = level / k();
  std::vector<CycloElement> roots;
  roots.reserve(k());
  for (int e = 0; e < k(); ++e)
    roots.push_back(CycloElement::root(level, e * r));
  CycloMatrix m(level, n(), n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      m.set(i, j, roots[(*this)(i, j)]);
  return m;
}

Eigen::MatrixXcd ButsonMatrix::to_numeric() const {
  Eigen::MatrixXcd m(n(), n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      m(i, j) = std::polar(1.0, 2.0 * std::numbers::pi * (*this)(i, j) / k());
  return m;
}

ExponentGrid power_map(const ButsonMatrix &h, int j) {
  ExponentGrid g = h.grid();
  for (int &e : g.exps)
    e = mod_pos(static_cast<std::int64_t>(e) * j, g.k);
  return g;
}

EntrySet entry_set(const ButsonMatrix &h) {
  EntrySet s{h.k(), {}};
  s.exponents.insert(h.grid().exps.begin(), h.grid().exps.end());
  return s;
}

bool is_hermitian(const ButsonMatrix &h) {
  for (int i = 0; i < h.n(); ++i)
    for (int j = i; j < h.n(); ++j)
      if (h(i, j) != mod_pos(-h(j, i), h.k()))
        return false;
  return true;
}

bool contains_exponent(const ButsonMatrix &h, int e) {
  const int target = mod_pos(e, h.k());
  for (int x : h.grid().exps)
    if (x == target)
      return true;
  return false;
}

bool avoids_real(const ButsonMatrix &h) {
  for (int x : h.grid().exps)
    if (x == 0 || 2 * x == h.k())
      return false;
  return true;
}

ButsonMatrix lift(const ButsonMatrix &h, int k_target) {
  if (k_target < 1 || k_target % h.k() != 0)
    throw std::invalid_argument("lift: target root order " + std::to_string(k_target) +
                                " is not a multiple of " + std::to_string(h.k()));
  ExponentGrid g = h.grid();
  for (int &e : g.exps)
    e *= k_target / h.k();
  g.k = k_target;
  return ButsonMatrix::from_grid(std::move(g));
}

ButsonMatrix scale_by_root(const ButsonMatrix &h, const RootOfUnity &zeta) {
  const int k = std::lcm(h.k(), zeta.order());
  ExponentGrid g = lift(h, k).grid();
  const int shift = zeta.exponent_at(k);
  for (int &e : g.exps)
    e = (e + shift) % k;
  return ButsonMatrix::from_grid(std::move(g));
}

ButsonMatrix adjoint(const ButsonMatrix &h) {
  ExponentGrid g = h.grid();
  for (int i = 0; i < h.n(); ++i)
    for (int j = 0; j < h.n(); ++j)
      g.exps[i * h.n() + j] = mod_pos(-h(j, i), h.k());
  return ButsonMatrix::from_grid(std::move(g));
}

ButsonMatrix kron(const ButsonMatrix &a, const ButsonMatrix &b) {
  const int k = std::lcm(a.k(), b.k());
  const int ra = k / a.k(), rb = k / b.k();
  const int n = a.n() * b.n();
  std::vector<int> exps(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      for (int p = 0; p < b.n(); ++p)
        for (int q = 0; q < b.n(); ++q)
          exps[(i * b.n() + p) * n + j * b.n() + q] = (a(i, j) * ra + b(p, q) * rb) % k;
  return ButsonMatrix::from_grid(ExponentGrid(n, k, std::move(exps)));
}

ButsonMatrix fourier(int n) {
  if (n < 1)
    throw std::invalid_argument("fourier: n must be positive");
  std::vector<int> exps(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      exps[i * n + j] = (i * j) % n;
  return ButsonMatrix::from_grid(ExponentGrid(n, n, std::move(exps)));
}

} // namespace butson
