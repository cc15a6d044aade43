#include "ptsym/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "ptsym/error.hpp"

namespace ptsym {

HamiltonianParams HamiltonianParams::make(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorKind::InvalidArgument, "parameters a, b, c must be finite");
  }
  return {a, b, c};
}

bool HamiltonianParams::at_exceptional_point() const {
  return std::abs(discriminant()) <= 1e-14 * (b * b + c * c);
}

std::string_view to_string(PTPhase phase) {
  switch (phase) {
    case PTPhase::Unbroken: return "unbroken";
    case PTPhase::Broken: return "broken";
    case PTPhase::Exceptional: return "exceptional";
  }
  return "unknown";
}

PTPhase classify_phase(const HamiltonianParams& p, double tol) {
  const double d = p.discriminant();
  if (d > tol) return PTPhase::Unbroken;
  if (d < -tol) return PTPhase::Broken;
  return PTPhase::Exceptional;
}

Mat2C build_hamiltonian(const HamiltonianParams& p) {
  const Complex ib{0.0, p.b};
  return {p.a - p.c, ib, ib, p.a + p.c};
}

Complex discriminant_root(const HamiltonianParams& p) {
  // +0 imaginary part selects the upper branch for negative arguments.
  return std::sqrt(Complex{p.discriminant(), 0.0});
}

Spectrum spectrum(const HamiltonianParams& p, double tol) {
  Spectrum out;
  out.s = discriminant_root(p);
  out.e_minus = p.a - out.s;
  out.e_plus = p.a + out.s;
  out.phase = classify_phase(p, tol);
  return out;
}

namespace {

VectorWarnings warnings_for(const HamiltonianParams& p, Complex s) {
  return {s == 0.0, !(p.b > 0.0 && p.c > 0.0)};
}

}  // namespace

CorrectedBasis corrected_vectors(const HamiltonianParams& p) {
  if (p.c == 0.0) {
    throw Error(ErrorKind::DegenerateParameter, "corrected vectors need c != 0");
  }
  const Complex s = discriminant_root(p);
  CorrectedBasis out;
  out.r_plus = (p.c + s) / (2.0 * p.c);
  out.r_minus = (p.c - s) / (2.0 * p.c);
  const Complex sp = std::sqrt(out.r_plus);
  const Complex sm = std::sqrt(out.r_minus);
  out.phi_minus = {sp, -kI * sm};
  out.phi_plus = {kI * sm, sp};
  out.warnings = warnings_for(p, s);
  return out;
}

LegacyBasis legacy_vectors(const HamiltonianParams& p) {
  if (p.b == 0.0) {
    throw Error(ErrorKind::DegenerateParameter, "legacy vectors need b != 0");
  }
  const Complex s = discriminant_root(p);
  LegacyBasis out;
  out.r = (p.c + s) / p.b;
  out.psi_minus = {1.0, -kI * out.r};
  out.psi_plus = {1.0, -kI / out.r};
  out.warnings = warnings_for(p, s);
  return out;
}

double eigen_residual(const Mat2C& h, const Vec2C& v, Complex lambda) {
  const double n = norm(v);
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, "eigen residual of the zero vector");
  return norm(h * v - lambda * v) / n;
}

}  // namespace ptsym
