#pragma once

// The two-level pseudo-Hermitian model H(a,b,c) = [[a-c, ib], [ib, a+c]]:
// spectrum, PT-phase classification and both eigenvector families.

#include <string_view>

#include "ptsym/cxmat.hpp"

namespace ptsym {

inline constexpr double kDefaultPhaseTol = 1e-12;
inline constexpr double kDefaultTolEq = 1e-10;
inline constexpr double kDefaultTolIneq = 1e-6;

struct HamiltonianParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  /// Throws InvalidArgument when any parameter is NaN or infinite.
  static HamiltonianParams make(double a, double b, double c);

  /// c^2 - b^2, evaluated as (c - b)(c + b).
  double discriminant() const { return (c - b) * (c + b); }
  /// The closed-form eigenvectors are derived for b >= 0, c > 0.
  bool in_vector_domain() const { return b >= 0.0 && c > 0.0; }
  /// |c^2 - b^2| <= 1e-14 (b^2 + c^2): the C operator diverges here.
  bool at_exceptional_point() const;
};

enum class PTPhase { Unbroken, Broken, Exceptional };

std::string_view to_string(PTPhase phase);
PTPhase classify_phase(const HamiltonianParams& p, double tol = kDefaultPhaseTol);

struct Spectrum {
  Complex s;  // principal sqrt(c^2 - b^2)
  Complex e_minus;
  Complex e_plus;
  PTPhase phase = PTPhase::Exceptional;
};

// Construction-time warnings; neither makes the returned vectors unusable.
struct VectorWarnings {
  bool coalescent = false;       // s = 0, the two eigenvectors are parallel
  bool out_of_domain = false;    // b <= 0 or c <= 0
};

struct LegacyBasis {
  Complex r;
  Vec2C psi_minus;
  Vec2C psi_plus;
  VectorWarnings warnings;
};

struct CorrectedBasis {
  Complex r_plus;
  Complex r_minus;
  Vec2C phi_minus;
  Vec2C phi_plus;
  VectorWarnings warnings;
};

Mat2C build_hamiltonian(const HamiltonianParams& p);
Complex discriminant_root(const HamiltonianParams& p);
Spectrum spectrum(const HamiltonianParams& p, double tol = kDefaultPhaseTol);

/// phi_-  = (sqrt R+, -i sqrt R-), phi_+ = (i sqrt R-, sqrt R+),
/// R+- = (c +- s) / 2c. Throws DegenerateParameter when c = 0.
CorrectedBasis corrected_vectors(const HamiltonianParams& p);

/// psi_- = (1, -i r), psi_+ = (1, -i/r), r = (c + s) / b.
/// Throws DegenerateParameter when b = 0.
LegacyBasis legacy_vectors(const HamiltonianParams& p);

/// |H v - lambda v| / |v|. Throws ZeroVector for v = 0.
double eigen_residual(const Mat2C& h, const Vec2C& v, Complex lambda);

}  // namespace ptsym
