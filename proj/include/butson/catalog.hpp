// Built-in seed matrices. Every stored claim is recomputed by verify_entry;
// nothing is trusted from the table.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "butson/morphism.hpp"

namespace butson {

namespace claim {

/// The matrix passes verify_butson.
struct Butson {};
/// certify_spectrum holds for this claim.
struct Spectrum {
  SpectrumClaim spectrum;
};
/// T equals (or, when !exact, contains) these residues.
struct PowerSet {
  std::vector<int> residues;
  bool exact = true;
};
/// M^power = scalar * I.
struct ScalarPower {
  int power;
  long scalar;
};
/// sqrt(m)^{1-power} M^power equals the expected grid.
struct PowerImage {
  int power;
  ExponentGrid expected;
};
/// Multiplicative order of m^{-1/2} zeta M, zeta defaulting to 1.
struct UnitaryOrder {
  std::optional<RootOfUnity> prescale;
  int order;
};
/// complete_domain(T) reaches a coset of size d.
struct CompleteDomain {
  int d;
};
/// Complete: But(n, domain) -> But(degree n, output) through a coset of
/// size domain in T. Partial: domain is the eigenvalue order, X = T.
struct Signature {
  bool complete;
  int domain;
  int degree;
  int output;
};

} // namespace claim

using Claim = std::variant<claim::Butson, claim::Spectrum, claim::PowerSet, claim::ScalarPower,
                           claim::PowerImage, claim::UnitaryOrder, claim::CompleteDomain,
                           claim::Signature>;

std::string describe(const Claim &c);

struct CatalogEntry {
  std::string name;
  ButsonMatrix matrix;
  std::vector<Claim> claims;
  std::string source;
};

struct ClaimResult {
  std::string claim;
  bool passed;
  std::string detail;
};

struct EntryReport {
  std::string name;
  std::vector<ClaimResult> results;
  bool passed() const;
};

const std::vector<CatalogEntry> &catalog();
/// Throws std::invalid_argument for unknown names.
const CatalogEntry &get(std::string_view name);
std::optional<std::reference_wrapper<const CatalogEntry>> find_entry(std::string_view name);

EntryReport verify_entry(const CatalogEntry &entry);
std::vector<EntryReport> verify_all();

} // namespace butson
