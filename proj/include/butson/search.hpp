// Searches over small Butson matrices: the 2 x 2 classification, the roots
// of unity brute force, and spectrum-targeted backtracking.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "butson/spectra.hpp"

namespace butson {

/// Calls f on every member of But(2, l) in (a, b, d) lexicographic order,
/// where the grid is [[a, b], [c, d]] and c is forced by orthogonality.
void for_each_but2(int ell, const std::function<void(const ButsonMatrix &)> &f);
std::vector<ButsonMatrix> enumerate_but2(int ell);

enum class Template { None, Traceless, M1, M2 };

std::string to_string(Template t);

struct TemplateMatch {
  Template kind = Template::None;
  /// Exponents of the parameters a, b modulo l.
  int a = 0;
  int b = 0;
  /// M2 matched after swapping both rows and columns.
  bool swapped = false;
};

/// Traceless, then M1 = [[a, ab], [-a b^*, a]], then M2 = [[a, ab], [-i a b^*, i a]]
/// (directly or after the simultaneous swap).
TemplateMatch match_template(const ButsonMatrix &m);

struct ClassRecord {
  ButsonMatrix matrix;
  /// Certified spectrum of the matrix; empty when 2^{-1/2} M has no finite
  /// order within the bound.
  std::optional<SpectrumClaim> spectrum;
  std::optional<int> unitary_order;
  /// lambda_1 / lambda_2.
  std::optional<RootOfUnity> ratio;
  TemplateMatch match;
  /// Orders of 2^{-1/2} lambda_1 and 2^{-1/2} lambda_2.
  std::optional<std::pair<int, int>> orders;

  int max_order() const { return orders ? std::max(orders->first, orders->second) : 0; }
};

struct Finding {
  enum class Kind { Counterexample, Observation };
  Kind kind;
  std::string rule;
  /// Index into the record list, or -1 for aggregate findings.
  int record;
  std::string message;
};

struct Classification {
  int ell = 0;
  int bound = 0;
  std::size_t examined = 0;
  std::vector<ClassRecord> records;
  std::vector<Finding> findings;

  std::size_t finite_count() const;
  std::size_t counterexample_count() const;
};

/// Ratio in {-1, +-i, +-zeta_3} up to inversion.
bool ratio_allowed(const RootOfUnity &ratio);

inline constexpr int kClassifyCap = 24;

/// Throws std::invalid_argument for odd l or l above the cap. bound <= 0
/// selects default_bound(l).
Classification classify2(int ell, int bound = 0, int jobs = 1, int cap = kClassifyCap);

struct RootPair {
  RootOfUnity alpha;
  RootOfUnity lambda;
  friend bool operator==(const RootPair &, const RootPair &) = default;
};

/// Exact check of alpha + alpha^{-1} = sqrt(2) (lambda + lambda^{-1}).
bool certify_root_pair(const RootPair &p);

/// Representative with argument in [0, pi/2] under negation and conjugation.
RootOfUnity canonical_root(const RootOfUnity &z);

/// Classes of pairs of roots of unity of order <= bound with
/// Re(alpha) = sqrt(2) Re(lambda), each certified exactly.
std::vector<RootPair> roots_brute_force(int bound);

struct SearchResult {
  std::optional<ButsonMatrix> matrix;
  /// Complete candidate matrices examined.
  long long examined = 0;
};

inline constexpr int kSearchMaxOrder = 6;

/// Row-by-row backtracking over But(n, l) returning the first matrix whose
/// spectrum certifies against target. The result does not depend on jobs.
SearchResult spectrum_search(int n, int ell, const SpectrumClaim &target, long long budget,
                             int jobs = 1);

} // namespace butson
