#include "ptsym/scan.hpp"

#include <cmath>
#include <limits>

#include "ptsym/error.hpp"
#include "ptsym/symmetry.hpp"

namespace ptsym {

std::string_view to_string(SweepParam param) {
  switch (param) {
    case SweepParam::A: return "a";
    case SweepParam::B: return "b";
    case SweepParam::C: return "c";
  }
  return "?";
}

std::optional<SweepParam> parse_sweep_param(std::string_view name) {
  if (name == "a") return SweepParam::A;
  if (name == "b") return SweepParam::B;
  if (name == "c") return SweepParam::C;
  return std::nullopt;
}

HamiltonianParams with_value(HamiltonianParams p, SweepParam param, double value) {
  switch (param) {
    case SweepParam::A: p.a = value; break;
    case SweepParam::B: p.b = value; break;
    case SweepParam::C: p.c = value; break;
  }
  return p;
}

namespace {

double discriminant_at(const HamiltonianParams& base, SweepParam sweep, double x) {
  return with_value(base, sweep, x).discriminant();
}

ScanRow evaluate(const HamiltonianParams& p, double value) {
  const Spectrum spec = spectrum(p);
  ScanRow row{value, spec.e_minus, spec.e_plus, spec.phase,
              std::numeric_limits<double>::quiet_NaN()};
  if (!p.at_exceptional_point()) {
    row.comm_residual = frobenius_norm(commutator(build_hamiltonian(p), c_operator(p)));
  }
  return row;
}

}  // namespace

double bisect_exceptional_point(const HamiltonianParams& base, SweepParam sweep, double lo,
                                double hi) {
  double f_lo = discriminant_at(base, sweep, lo);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = discriminant_at(base, sweep, mid);
    if (std::abs(f_mid) <= kCrossingTol || mid == lo || mid == hi) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ScanResult scan(const HamiltonianParams& base, SweepParam sweep, double from, double to,
                int steps) {
  if (steps < 2) throw Error(ErrorKind::InvalidArgument, "scan needs at least 2 steps");
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
    throw Error(ErrorKind::InvalidArgument, "scan range must satisfy from < to");
  }

  ScanResult out;
  out.sweep = sweep;
  out.base = base;
  out.rows.reserve(static_cast<std::size_t>(steps));

  std::vector<double> disc;
  disc.reserve(out.rows.capacity());
  const double span = to - from;
  for (int i = 0; i < steps; ++i) {
    const double x = i + 1 == steps ? to : from + span * i / (steps - 1);
    const HamiltonianParams p = with_value(base, sweep, x);
    out.rows.push_back(evaluate(p, x));
    disc.push_back(p.discriminant());
  }

  for (int i = 0; i < steps; ++i) {
    if (std::abs(disc[i]) <= kCrossingTol) {
      // a run of grid points inside the band is one crossing
      if (i == 0 || std::abs(disc[i - 1]) > kCrossingTol) {
        out.exceptional_points.push_back(out.rows[i].value);
      }
      continue;
    }
    if (i + 1 < steps && std::abs(disc[i + 1]) > kCrossingTol &&
        (disc[i] < 0.0) != (disc[i + 1] < 0.0)) {
      out.exceptional_points.push_back(
          bisect_exceptional_point(base, sweep, out.rows[i].value, out.rows[i + 1].value));
    }
  }
  return out;
}

}  // namespace ptsym
