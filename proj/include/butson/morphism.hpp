// Sound pairs and the plug-in construction H^phi.
//
// For a seed M in But(m, l) the map phi sends zeta_k^i to sqrt(m)^{1-i} M^i.
// A pair (H, M) is (X, Y)-sound when
//   1. sqrt(m)^{1-i} M^i is Butson for every zeta_k^i in X, and
//   2. the entrywise power H^{(j)} is Butson for every zeta_k^j in Y,
// where X contains the entries of H and Y the eigenvalues of m^{-1/2} M.
// Sound pairs map to H^phi in But(mn, l).
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "butson/butson_matrix.hpp"
#include "butson/spectra.hpp"

namespace butson {

/// Exponents i (as residues modulo the window) for which
/// sqrt(m)^{1-i} M^i is a Butson matrix, with the recognized images.
struct PowerSet {
  int window = 1;
  std::vector<int> T;
  /// Image of each i in T at its realized root order.
  std::map<int, ButsonMatrix> images;

  bool contains(int residue) const { return images.count(residue) > 0; }
  int root_order(int residue) const { return images.at(residue).k(); }
};

/// Tests i = 1..k exactly.
PowerSet hadamard_power_set(const ButsonMatrix &m, int k);

struct MorphismSeed {
  ButsonMatrix matrix;
  /// Certified, normalized: K is the multiplicative order of m^{-1/2} M.
  SpectrumClaim spectrum;
  PowerSet powers; // window == spectrum.K

  int degree() const { return matrix.n(); }
  int eigen_order() const { return spectrum.K; }
  /// lcm of the realized root orders over T.
  int effective_order() const;
  /// lcm of the realized root orders over the given residues (all in T).
  int output_order(const std::set<int> &residues) const;
};

/// Certifies the spectrum (bound <= 0 selects default_bound) and computes T.
/// Throws std::runtime_error when no finite spectrum certifies.
MorphismSeed make_seed(const ButsonMatrix &m, int bound = 0);

enum class SoundnessCondition {
  EntriesInX,      // every entry of H lies in X
  EigenvaluesInY,  // every eigenvalue of the seed lies in Y
  HadamardPowers,  // condition 1
  EntrywisePowers, // condition 2
};

struct SoundnessViolation {
  SoundnessCondition condition;
  int exponent;
  std::optional<std::pair<int, int>> witness;
  std::string message;
};

struct SoundPair {
  ButsonMatrix h;
  MorphismSeed seed;
  std::set<int> X;
  std::set<int> Y;
};

struct SoundnessReport {
  std::set<int> X;
  std::set<int> Y;
  std::optional<SoundnessViolation> violation;
  std::optional<SoundPair> pair;

  bool sound() const { return pair.has_value(); }
};

/// X defaults to the entries of H, Y to the seed's eigenvalue exponents at
/// level k. Throws std::invalid_argument when the eigenvalue order does not
/// divide the root order k of H.
SoundnessReport check_sound(const ButsonMatrix &h, const MorphismSeed &seed,
                            std::optional<std::set<int>> X = std::nullopt,
                            std::optional<std::set<int>> Y = std::nullopt);

/// H^phi, re-verified. Output root order is the lcm of the images used.
ButsonMatrix apply_morphism(const SoundPair &pair);

struct Progression {
  int d;
  int offset;
  friend bool operator==(const Progression &, const Progression &) = default;
};

/// Maximal cosets {c + j k/d : 0 <= j < d} contained in T (residues mod k),
/// sorted by d descending then offset.
std::vector<Progression> complete_domain(const std::vector<int> &T, int k);

/// prod over p | k of p^a with a maximal such that p^{a+1} | k.
int cor_d_formula(int k);

/// Seed for zeta_t M; requires gcd(t, K) = 1.
MorphismSeed twist(const MorphismSeed &seed, int t);

/// Seed for H kron M, H Hermitian; requires a primitive spectrum with 4 | K.
MorphismSeed tensor_lift(const ButsonMatrix &h, const MorphismSeed &seed);

struct CoprimeProbe {
  bool applicable = false;
  bool confirmed = false;
  std::vector<int> coprime;
  std::optional<int> counterexample;
};

/// Whether every i coprime to K lies in T.
CoprimeProbe coprime_conjecture_probe(const MorphismSeed &seed);

std::string to_string(SoundnessCondition c);

} // namespace butson
