// Exact arithmetic in rings of cyclotomic integers Z[zeta_L].
//
// An element of level L is stored as its canonical residue modulo the L-th
// cyclotomic polynomial, i.e. phi(L) integer coefficients of the power basis
// 1, zeta_L, ..., zeta_L^{phi(L)-1}. Equality is coefficient equality.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace butson {

using Integer = mpz_class;
/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Integer>;

int euler_phi(int n);
/// Distinct prime divisors in increasing order.
std::vector<int> prime_divisors(int n);
int lcm_int(int a, int b);
/// Positive residue of a modulo n.
inline int mod_pos(std::int64_t a, int n) {
  auto r = static_cast<int>(a % n);
  return r < 0 ? r + n : r;
}

/// The L-th cyclotomic polynomial, computed by dividing x^L - 1 by the
/// cyclotomic polynomials of the proper divisors of L.
const IntPoly &cyclo_poly(int L);

std::string poly_to_string(const IntPoly &p, char var = 'x');

/// zeta_k^e, with the exponent reduced into [0, k).
class RootOfUnity {
public:
  RootOfUnity(int order, std::int64_t exponent);

  int order() const { return order_; }
  int exponent() const { return exponent_; }

  /// Same root written at its minimal order k / gcd(k, e).
  RootOfUnity minimal() const;
  int minimal_order() const { return minimal().order(); }
  /// Exponent of this root as a power of zeta_level; the minimal order must
  /// divide level.
  int exponent_at(int level) const;

  RootOfUnity inverse() const { return {order_, -exponent_}; }
  std::complex<double> value() const;
  std::string to_string() const;

  friend RootOfUnity operator*(const RootOfUnity &a, const RootOfUnity &b);
  friend bool operator==(const RootOfUnity &a, const RootOfUnity &b);

private:
  int order_;
  int exponent_;
};

namespace detail {
struct CycloField;
}

class CycloElement {
public:
  /// Zero of Z[zeta_1] = Z.
  CycloElement();

  static CycloElement zero(int level);
  static CycloElement integer(int level, const Integer &value);
  static CycloElement root(int level, std::int64_t exponent);
  /// sum_e counts[e] * zeta_level^e for e < counts.size().
  static CycloElement root_sum(int level, std::span<const int> counts);

  int level() const;
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Integer> &coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Rational integer value, when the element lies in Z.
  std::optional<Integer> as_integer() const;

  CycloElement conj() const;
  /// Image under Z[zeta_L] -> Z[zeta_target]; target must be a multiple of L.
  CycloElement embed(int target) const;
  /// Multiplication by zeta_L^e.
  CycloElement mul_root(std::int64_t e) const;
  /// x / d when every coefficient is divisible by d.
  std::optional<CycloElement> divide_exact(const Integer &d) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloElement operator-() const;
  CycloElement &operator+=(const CycloElement &rhs);
  CycloElement &operator-=(const CycloElement &rhs);
  CycloElement &operator*=(const CycloElement &rhs);
  CycloElement &operator*=(const Integer &rhs);

  friend CycloElement operator+(CycloElement a, const CycloElement &b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement &b) { return a -= b; }
  friend CycloElement operator*(const CycloElement &a, const CycloElement &b);
  friend CycloElement operator*(CycloElement a, const Integer &b) { return a *= b; }
  friend CycloElement operator*(const Integer &a, CycloElement b) { return b *= a; }
  friend bool operator==(const CycloElement &a, const CycloElement &b);

private:
  CycloElement(const detail::CycloField *field, std::vector<Integer> coeffs);
  void require_same_level(const CycloElement &other, const char *op) const;

  const detail::CycloField *field_;
  std::vector<Integer> coeffs_;
};

/// Smallest L with sqrt(m) in Q(zeta_L).
int sqrt_conductor(int m);

/// sqrt(m) as an element of Z[zeta_L], positive under zeta_L -> e^{2 pi i/L}.
/// Built from quadratic Gauss sums; throws std::invalid_argument when the
/// conductor of sqrt(m) does not divide L.
CycloElement sqrt_embed(int m, int L);

/// Recognizes elements of the form scale * zeta_L^e by comparing against the
/// precomputed table scale * zeta_L^e, 0 <= e < L.
class RootDetector {
public:
  explicit RootDetector(const CycloElement &scale);
  std::optional<int> find(const CycloElement &x) const;
  int level() const { return level_; }

private:
  int level_;
  std::vector<CycloElement> table_;
};

/// Returns zeta_L^e when x = scale * zeta_L^e (L the common level).
std::optional<RootOfUnity> detect_scaled_root(const CycloElement &x,
                                              const CycloElement &scale);

} // namespace butson
