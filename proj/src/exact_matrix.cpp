#include "butson/exact_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace butson {

namespace {

void require(bool cond, const char *what) {
  if (!cond)
    throw std::invalid_argument(what);
}

} // namespace

CycloMatrix::CycloMatrix(int level, int rows, int cols)
    : level_(level), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, CycloElement::zero(level)) {
  require(rows >= 0 && cols >= 0, "CycloMatrix: negative dimension");
}

CycloMatrix CycloMatrix::identity(int level, int n) {
  return scalar(CycloElement::integer(level, 1), n);
}

CycloMatrix CycloMatrix::scalar(const CycloElement &s, int n) {
  CycloMatrix m(s.level(), n, n);
  for (int i = 0; i < n; ++i)
    m.entries_[i * n + i] = s;
  return m;
}

void CycloMatrix::set(int i, int j, CycloElement value) {
  require(value.level() == level_, "CycloMatrix::set: level mismatch");
  entries_[i * cols_ + j] = std::move(value);
}

CycloMatrix CycloMatrix::embed(int level) const {
  if (level == level_)
    return *this;
  CycloMatrix r(level, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k].embed(level);
  return r;
}

std::optional<CycloElement> CycloMatrix::scalar_value() const {
  if (!is_square() || rows_ == 0)
    return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const auto &e = (*this)(i, j);
      if (i == j ? !(e == (*this)(0, 0)) : !e.is_zero())
        return std::nullopt;
    }
  return (*this)(0, 0);
}

bool operator==(const CycloMatrix &a, const CycloMatrix &b) {
  return a.level_ == b.level_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

CycloMatrix operator*(const CycloMatrix &a, const CycloMatrix &b) {
  require(a.cols() == b.rows(), "matrix multiply: dimension mismatch");
  require(a.level() == b.level(), "matrix multiply: level mismatch");
  CycloMatrix r(a.level(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      CycloElement acc = CycloElement::zero(a.level());
      for (int k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero())
          acc += a(i, k) * b(k, j);
      r.set(i, j, std::move(acc));
    }
  return r;
}

CycloMatrix operator+(const CycloMatrix &a, const CycloMatrix &b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix add: dimension mismatch");
  require(a.level() == b.level(), "matrix add: level mismatch");
  CycloMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.set(i, j, a(i, j) + b(i, j));
  return r;
}

CycloMatrix operator-(const CycloMatrix &a, const CycloMatrix &b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix subtract: dimension mismatch");
  require(a.level() == b.level(), "matrix subtract: level mismatch");
  CycloMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.set(i, j, a(i, j) - b(i, j));
  return r;
}

CycloMatrix operator*(const CycloElement &s, const CycloMatrix &a) {
  require(s.level() == a.level(), "scalar multiply: level mismatch");
  CycloMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.set(i, j, s * a(i, j));
  return r;
}

CycloMatrix adjoint(const CycloMatrix &a) {
  CycloMatrix r(a.level(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.set(j, i, a(i, j).conj());
  return r;
}

CycloMatrix pow(const CycloMatrix &a, int e) {
  require(a.is_square(), "matrix power: matrix is not square");
  require(e >= 0, "matrix power: negative exponent");
  CycloMatrix r = CycloMatrix::identity(a.level(), a.rows());
  for (int i = 0; i < e; ++i)
    r = r * a;
  return r;
}

CycloMatrix kron(const CycloMatrix &a, const CycloMatrix &b) {
  const int L = std::lcm(a.level(), b.level());
  const CycloMatrix x = a.embed(L), y = b.embed(L);
  CycloMatrix r(L, x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero())
        continue;
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l)
          r.set(i * y.rows() + k, j * y.cols() + l, x(i, j) * y(k, l));
    }
  return r;
}

std::vector<std::vector<int>> Permutation::materialize() const {
  std::vector<std::vector<int>> p(image.size(), std::vector<int>(image.size(), 0));
  for (std::size_t i = 0; i < image.size(); ++i)
    p[i][image[i]] = 1;
  return p;
}

CycloMatrix Permutation::conjugate(const CycloMatrix &a) const {
  require(a.rows() == size() && a.cols() == size(), "Permutation::conjugate: size mismatch");
  CycloMatrix r(a.level(), size(), size());
  for (int i = 0; i < size(); ++i)
    for (int k = 0; k < size(); ++k)
      r.set(i, k, a(image[i], image[k]));
  return r;
}

Permutation kron_shuffle(int m, int n) {
  require(m >= 1 && n >= 1, "kron_shuffle: sizes must be positive");
  // Row q*n + r (q < m, r < n) picks column r*m + q.
  Permutation p;
  p.image.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m * n; ++i)
    p.image[i] = (i % n) * m + i / n;
  return p;
}

CharPoly CharPoly::embed(int target) const {
  CharPoly r{target, {}};
  r.coeffs.reserve(coeffs.size());
  for (const auto &c : coeffs)
    r.coeffs.push_back(c.embed(target));
  return r;
}

CharPoly char_poly(const CycloMatrix &a) {
  require(a.is_square(), "char_poly: matrix is not square");
  const int n = a.rows();
  const int L = a.level();
  const auto zero = CycloElement::zero(L);

  // Berkowitz: grow the leading principal submatrix one row at a time. The
  // running polynomial p (highest degree first) is multiplied by the lower
  // triangular Toeplitz matrix whose first column is
  //   1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
  std::vector<CycloElement> p{CycloElement::integer(L, 1)};
  for (int r = 0; r < n; ++r) {
    std::vector<CycloElement> col;
    col.reserve(r + 2);
    col.push_back(CycloElement::integer(L, 1));
    col.push_back(-a(r, r));
    std::vector<CycloElement> v(r);
    for (int i = 0; i < r; ++i)
      v[i] = a(i, r);
    for (int step = 0; step < r; ++step) {
      CycloElement dot = zero;
      for (int i = 0; i < r; ++i)
        dot += a(r, i) * v[i];
      col.push_back(-dot);
      std::vector<CycloElement> next(r, zero);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          next[i] += a(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<CycloElement> q(r + 2, zero);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  CharPoly result{L, {}};
  result.coeffs.assign(p.rbegin(), p.rend());
  return result;
}

CycloMatrix evaluate(const CharPoly &p, const CycloMatrix &a) {
  require(a.is_square(), "evaluate: matrix is not square");
  require(p.level == a.level(), "evaluate: level mismatch");
  CycloMatrix r(a.level(), a.rows(), a.cols());
  for (int i = p.degree(); i >= 0; --i)
    r = r * a + CycloMatrix::scalar(p.coeffs[i], a.rows());
  return r;
}

CharPoly poly_from_roots(const std::vector<CycloElement> &roots, int level) {
  CharPoly p{level, {CycloElement::integer(level, 1)}};
  for (const auto &root : roots) {
    require(root.level() == level, "poly_from_roots: level mismatch");
    std::vector<CycloElement> q(p.coeffs.size() + 1, CycloElement::zero(level));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
      q[i + 1] += p.coeffs[i];
      q[i] -= root * p.coeffs[i];
    }
    p.coeffs = std::move(q);
  }
  return p;
}

} // namespace butson
