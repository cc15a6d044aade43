#pragma once

// One-parameter sweeps of H(a,b,c) for the PT phase diagram, with
// bisection of the exceptional point c^2 = b^2.

#include <optional>
#include <string_view>
#include <vector>

#include "ptsym/hamiltonian.hpp"

namespace ptsym {

enum class SweepParam { A, B, C };

std::string_view to_string(SweepParam param);
std::optional<SweepParam> parse_sweep_param(std::string_view name);

HamiltonianParams with_value(HamiltonianParams p, SweepParam param, double value);

struct ScanRow {
  double value = 0.0;
  Complex e_minus;
  Complex e_plus;
  PTPhase phase = PTPhase::Exceptional;
  double comm_residual = 0.0;  // |[H, C]|, NaN at the exceptional point
};

struct ScanResult {
  SweepParam sweep = SweepParam::B;
  HamiltonianParams base;
  std::vector<ScanRow> rows;
  std::vector<double> exceptional_points;
};

inline constexpr double kCrossingTol = 1e-12;

/// Uniform grid of `steps` points over [from, to] (steps >= 2, from < to).
/// Sign changes of c^2 - b^2 between neighbours are refined by bisection
/// to |c^2 - b^2| <= kCrossingTol; grid points already inside that band are
/// reported directly. Throws InvalidArgument on a bad range.
ScanResult scan(const HamiltonianParams& base, SweepParam sweep, double from, double to,
                int steps);

/// Bisection of c^2 - b^2 on [lo, hi]; the endpoint values must differ in sign.
double bisect_exceptional_point(const HamiltonianParams& base, SweepParam sweep, double lo,
                                double hi);

}  // namespace ptsym
