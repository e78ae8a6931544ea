// Eigenvalue orders of Butson matrices.
//
// Floating point only proposes a spectrum; a claim is accepted when the exact
// characteristic polynomial equals prod (x - sqrt(m) zeta_K^e) over Z[zeta_L].
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "butson/butson_matrix.hpp"

namespace butson {

/// Eigenvalues sqrt(m) * zeta_K^e for e in exponents (a multiset).
struct SpectrumClaim {
  int m = 1;
  int K = 1;
  std::vector<int> exponents;

  /// Every exponent coprime to K.
  bool primitive_only() const;
  /// Sorted exponents, K reduced to the lcm of the eigenvalue orders.
  SpectrumClaim normalized() const;
  /// Distinct exponents.
  std::vector<int> support() const;
  std::string to_string() const;

  friend bool operator==(const SpectrumClaim &, const SpectrumClaim &) = default;
};

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

/// Best rational approximation p/q of x with q <= max_den, accepted only
/// within tol. Continued-fraction convergents.
std::optional<Fraction> reconstruct_fraction(double x, std::int64_t max_den, double tol);

/// 4 * lcm(24, k).
int default_bound(int k);

inline constexpr double kArgumentTolerance = 1e-9;

/// Numeric eigenvalues, arguments reconstructed as rationals with
/// denominator <= bound. Empty when some eigenvalue matches no such rational
/// (the unitary has no finite order within the bound).
std::optional<SpectrumClaim> estimate_spectrum(const ButsonMatrix &m, int bound);

/// Exact characteristic-polynomial identity.
bool certify_spectrum(const ButsonMatrix &m, const SpectrumClaim &claim);

/// estimate_spectrum followed by certify_spectrum.
std::optional<SpectrumClaim> certified_spectrum(const ButsonMatrix &m, int bound);

/// Smallest N <= bound with M^N = sqrt(m)^N I, checked exactly.
std::optional<int> unitary_order(const ButsonMatrix &m, int bound);

} // namespace butson
