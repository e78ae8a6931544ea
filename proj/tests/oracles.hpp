// Independent reference computations used by the tests.
#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "butson/catalog.hpp"

namespace oracle {

using namespace butson;

inline ButsonMatrix grid(int k, std::initializer_list<std::initializer_list<int>> rows) {
  return ButsonMatrix::from_grid(ExponentGrid(k, rows));
}

inline const ButsonMatrix &cat(const char *name) { return get(name).matrix; }

// Determinant by Laplace expansion along the first row.
inline CycloElement cofactor_det(const CycloMatrix &a) {
  const int n = a.rows();
  if (n == 1)
    return a(0, 0);
  CycloElement total = CycloElement::zero(a.level());
  for (int j = 0; j < n; ++j) {
    CycloMatrix minor(a.level(), n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j)
          minor.set(r - 1, cc++, a(r, c));
    const CycloElement term = a(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline CycloMatrix random_root_matrix(std::mt19937 &rng, int level, int rows, int cols) {
  std::uniform_int_distribution<int> e(0, level - 1);
  CycloMatrix m(level, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.set(i, j, CycloElement::root(level, e(rng)));
  return m;
}

// Kronecker product entry by entry from the definition.
inline CycloMatrix kron_direct(const CycloMatrix &a, const CycloMatrix &b) {
  CycloMatrix out(a.level(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          out.set(i * b.rows() + p, j * b.cols() + q, a(i, j) * b(p, q));
  return out;
}

inline std::complex<double> zeta(int k, int e) {
  return std::polar(1.0, 2.0 * std::numbers::pi * e / k);
}

// Floating point Butson test for grids.
inline bool numeric_butson(const ExponentGrid &g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      std::complex<double> s = 0;
      for (int j = 0; j < g.n; ++j)
        s += zeta(g.k, g(a, j) - g(b, j));
      if (std::abs(s - std::complex<double>(a == b ? g.n : 0)) > 1e-9)
        return false;
    }
  return true;
}

} // namespace oracle
