#pragma once

// Claim battery: every equality / inequality asserted about the model is
// turned into a residual and adjudicated against a threshold.

#include <string>
#include <string_view>
#include <vector>

#include "ptsym/hamiltonian.hpp"

namespace ptsym {

enum class CheckKind { Equality, Inequality, NotApplicable };
enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(CheckKind kind);
std::string_view to_string(Verdict verdict);

// Equality passes iff residual <= threshold, inequality iff residual >=
// threshold. Equality thresholds are tol_eq times a per-claim magnitude
// scale; inequality thresholds are tol_ineq. Skipped checks carry a NaN
// residual and threshold.
struct CheckReport {
  std::string claim_id;
  CheckKind kind = CheckKind::NotApplicable;
  double residual = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::Skipped;
  std::string note;
};

struct BatteryResult {
  HamiltonianParams params;
  PTPhase phase = PTPhase::Exceptional;
  std::vector<CheckReport> checks;
};

/// Claim ids in emission order.
const std::vector<std::string_view>& claim_catalog();

/// Claims whose literal statement is known not to hold; a Fail is the
/// expected outcome for them.
bool expected_to_fail(std::string_view claim_id);

BatteryResult run_battery(const HamiltonianParams& p, double tol_eq = kDefaultTolEq,
                          double tol_ineq = kDefaultTolIneq);

/// 0 when every non-skipped check has its expected verdict, 1 otherwise.
int battery_verdict(const BatteryResult& result);

}  // namespace ptsym
