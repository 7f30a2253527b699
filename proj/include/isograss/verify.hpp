#pragma once

#include "isograss/form_space.hpp"
#include "isograss/orbits.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isograss {

/// Names of the property suites, in report order.
inline const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names{
      "round-trip",     "invariance",       "formula-vs-oracle", "open-orbit-argmax",
      "components",     "equal-dimension",  "symplectic-parity", "witness"};
  return names;
}
/// The suites run when none are requested explicitly.
inline const std::vector<std::string>& default_suite_names() {
  static const std::vector<std::string> names{"round-trip", "invariance", "formula-vs-oracle",
                                              "open-orbit-argmax", "components"};
  return names;
}

struct VerifyConfig {
  std::uint64_t seed = 42;
  /// Samples per canonical representative (invariance, witness) or per
  /// (params, r) (symplectic-parity).
  int trials = 100;
  /// Largest ambient dimension for the orthogonal and unitary cases.
  int max_ambient = 8;
  /// Largest ambient dimension (2n) for the symplectic case.
  int max_symplectic_ambient = 10;
  std::vector<CaseTag> cases{CaseTag::RealOrthogonal, CaseTag::Unitary,
                             CaseTag::ComplexOrthogonal, CaseTag::Symplectic};
  std::vector<std::string> suites = default_suite_names();
  unsigned threads = 1;
  /// Bound on numerators/denominators of Cayley coefficients.
  long magnitude = 2;
  /// The stabilizer formula under test (swap in a fixture to check that the
  /// harness notices).
  StabilizerFormula formula = dim_stabilizer;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// The first few failure descriptions, in deterministic order.
  std::vector<std::string> examples;
  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  /// One line per suite plus an overall verdict; byte-stable for a config.
  std::string summary() const;
};

/// Every (params) with ambient dimension within the configured bounds, in
/// lexicographic order of the parameters.
std::vector<GroupParams> parameter_sets(CaseTag c, int max_ambient);

/// Run the configured suites. Work is split across `threads` by parameter
/// set; results are merged in a fixed order, so the report does not depend
/// on the thread count. Throws InvalidArgument on an unknown suite name.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace isograss
