// Butson Hadamard matrices stored as exponent grids: entry (i, j) denotes
// zeta_k^{exps(i, j)}.
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "butson/cyclotomic.hpp"
#include "butson/exact_matrix.hpp"

namespace butson {

/// Unvalidated n x n grid of exponents modulo k.
struct ExponentGrid {
  int n = 0;
  int k = 1;
  std::vector<int> exps; // row-major

  ExponentGrid() = default;
  ExponentGrid(int n, int k, std::vector<int> exps);
  ExponentGrid(int k, std::initializer_list<std::initializer_list<int>> rows);

  int operator()(int i, int j) const { return exps[i * n + j]; }
  /// Throws std::invalid_argument on bad shape or out-of-range exponents.
  void validate() const;

  friend bool operator==(const ExponentGrid &, const ExponentGrid &) = default;
};

struct VerifyResult {
  bool ok = false;
  /// First row pair (i, j), i <= j, whose inner product is wrong.
  std::optional<std::pair<int, int>> witness;

  explicit operator bool() const { return ok; }
};

/// Exact check of H H^* = n I over Z[zeta_k], row pairs only.
VerifyResult verify_butson(const ExponentGrid &grid);

class NotButsonError : public std::runtime_error {
public:
  NotButsonError(const ExponentGrid &grid, std::pair<int, int> witness);
  std::pair<int, int> witness() const { return witness_; }

private:
  std::pair<int, int> witness_;
};

/// A grid that passed verify_butson. Only constructible through from_grid.
class ButsonMatrix {
public:
  /// Throws NotButsonError when the grid fails verification.
  static ButsonMatrix from_grid(ExponentGrid grid);
  static std::optional<ButsonMatrix> try_from(ExponentGrid grid);

  int n() const { return grid_.n; }
  int k() const { return grid_.k; }
  int operator()(int i, int j) const { return grid_(i, j); }
  const ExponentGrid &grid() const { return grid_; }

  /// Exact matrix over Z[zeta_level]; level must be a multiple of k.
  CycloMatrix to_cyclo(int level) const;
  CycloMatrix to_cyclo() const { return to_cyclo(k()); }
  Eigen::MatrixXcd to_numeric() const;

  friend bool operator==(const ButsonMatrix &, const ButsonMatrix &) = default;

private:
  explicit ButsonMatrix(ExponentGrid grid) : grid_(std::move(grid)) {}
  ExponentGrid grid_;
};

struct EntrySet {
  int k = 1;
  std::set<int> exponents;
  friend bool operator==(const EntrySet &, const EntrySet &) = default;
};

/// Entrywise j-th power; the result is not asserted to be Butson.
ExponentGrid power_map(const ButsonMatrix &h, int j);

EntrySet entry_set(const ButsonMatrix &h);
bool is_hermitian(const ButsonMatrix &h);
bool contains_exponent(const ButsonMatrix &h, int e);
/// No entry equal to 1 or -1.
bool avoids_real(const ButsonMatrix &h);

/// Same matrix with root order k' (a multiple of k).
ButsonMatrix lift(const ButsonMatrix &h, int k_target);
/// zeta * H at root order lcm(k, order of zeta).
ButsonMatrix scale_by_root(const ButsonMatrix &h, const RootOfUnity &zeta);
/// Conjugate transpose.
ButsonMatrix adjoint(const ButsonMatrix &h);
ButsonMatrix kron(const ButsonMatrix &a, const ButsonMatrix &b);
/// F_n with exps(i, j) = i j mod n.
ButsonMatrix fourier(int n);

// Text format: "butson <n> <k>" followed by n rows of n exponents.

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string &message);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Parses the text format without checking orthogonality.
ExponentGrid parse_grid(std::string_view text);
/// parse_grid followed by verification.
ButsonMatrix parse_butson(std::string_view text);
std::string serialize(const ExponentGrid &grid);
inline std::string serialize(const ButsonMatrix &h) { return serialize(h.grid()); }

} // namespace butson
