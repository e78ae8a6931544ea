// Dense matrices over Z[zeta_L].
#pragma once

#include <optional>
#include <vector>

#include "butson/cyclotomic.hpp"

namespace butson {

class CycloMatrix {
public:
  /// rows x cols zero matrix at the given level.
  CycloMatrix(int level, int rows, int cols);

  static CycloMatrix identity(int level, int n);
  static CycloMatrix scalar(const CycloElement &s, int n);

  int level() const { return level_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const CycloElement &operator()(int i, int j) const { return entries_[i * cols_ + j]; }
  /// Assigning an element of a different level throws.
  void set(int i, int j, CycloElement value);

  CycloMatrix embed(int level) const;
  /// The common diagonal value when the matrix is a scalar multiple of I.
  std::optional<CycloElement> scalar_value() const;

  friend bool operator==(const CycloMatrix &a, const CycloMatrix &b);

private:
  int level_;
  int rows_;
  int cols_;
  std::vector<CycloElement> entries_;
};

CycloMatrix operator*(const CycloMatrix &a, const CycloMatrix &b);
CycloMatrix operator+(const CycloMatrix &a, const CycloMatrix &b);
CycloMatrix operator-(const CycloMatrix &a, const CycloMatrix &b);
CycloMatrix operator*(const CycloElement &s, const CycloMatrix &a);

/// Conjugate transpose.
CycloMatrix adjoint(const CycloMatrix &a);
/// a^e by iterated multiplication; a^0 is the identity.
CycloMatrix pow(const CycloMatrix &a, int e);
/// Kronecker product; operands at different levels are lifted to the lcm.
CycloMatrix kron(const CycloMatrix &a, const CycloMatrix &b);

/// Permutation stored as an index map: row i of the permutation matrix has
/// its single 1 in column image[i].
struct Permutation {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  /// 0/1 matrix with P[i][image[i]] = 1.
  std::vector<std::vector<int>> materialize() const;
  /// P * a * P^{-1}, computed by index relabelling.
  CycloMatrix conjugate(const CycloMatrix &a) const;
};

/// The Kronecker shuffle P_{mn}: P (A kron B) P^{-1} = B kron A for A of
/// size n x n and B of size m x m.
Permutation kron_shuffle(int m, int n);

/// Characteristic polynomial det(xI - A). coeffs[i] multiplies x^i; the
/// leading coefficient coeffs[n] is 1.
struct CharPoly {
  int level;
  std::vector<CycloElement> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  CharPoly embed(int target) const;
  friend bool operator==(const CharPoly &, const CharPoly &) = default;
};

/// Division-free (Berkowitz) characteristic polynomial.
CharPoly char_poly(const CycloMatrix &a);

/// p(A) by Horner's rule.
CycloMatrix evaluate(const CharPoly &p, const CycloMatrix &a);

/// prod_i (x - roots[i]); all roots at one level.
CharPoly poly_from_roots(const std::vector<CycloElement> &roots, int level);

} // namespace butson
