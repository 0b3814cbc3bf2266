// Reproducible checks of the published values: table fidelity, formula spot
// checks, Horton non-existence, oracle equivalence, probabilistic small-value
// checks, witness hunting and the property suites. Shared by the acceptance
// binary and `esz verify-claims`.
#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace esz::claims {

struct ClaimResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_s = 0.0;
  double limit_s = 0.0;
};

struct Claim {
  int id;
  std::string name;
  double limit_s;  // wall-clock ceiling; exceeding it fails the claim
  std::function<std::string(std::vector<std::string>& failures)> run;
};

/// Seeds of the witness hunts; fixed so the hunts replay exactly.
inline constexpr unsigned long long kHuntSeedNoPentagon = 1;
inline constexpr unsigned long long kHuntSeedNoEmptyPentagon = 1;

std::vector<Claim> all_claims();

ClaimResult run_claim(const Claim& c);

/// Runs every claim, printing one PASS/FAIL line each; returns true iff all pass.
bool run_all(std::ostream& out, const std::vector<int>& only = {});

}  // namespace esz::claims
