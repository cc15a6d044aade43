#include <doctest.h>

#include <cmath>
#include <random>

#include "ptsym/error.hpp"
#include "ptsym/hamiltonian.hpp"
#include "ptsym/symmetry.hpp"
#include "test_support.hpp"

using namespace ptsym;
using ptsym::test::dist;

namespace {

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

double rel(Complex got, Complex want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

}  // namespace

TEST_CASE("build_hamiltonian") {
  CHECK(build_hamiltonian({0.0, 3.0, 5.0}) == Mat2C{-5.0, Complex(0, 3), Complex(0, 3), 5.0});
  CHECK(build_hamiltonian({1.0, 0.0, 2.0}) == Mat2C::diag(-1.0, 3.0));
  CHECK(build_hamiltonian({0.0, 2.0, 2.0}) == Mat2C{-2.0, Complex(0, 2), Complex(0, 2), 2.0});
}

TEST_CASE("params reject non-finite values") {
  CHECK(error_kind([] { (void)HamiltonianParams::make(NAN, 1.0, 1.0); }) ==
        ErrorKind::InvalidArgument);
  CHECK(error_kind([] { (void)HamiltonianParams::make(0.0, INFINITY, 1.0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("discriminant_root takes the principal branch") {
  CHECK(discriminant_root({0.0, 3.0, 5.0}) == Complex(4.0));
  CHECK(discriminant_root({0.0, 5.0, 3.0}) == Complex(0.0, 4.0));
  CHECK(discriminant_root({0.0, 2.0, 2.0}) == Complex(0.0));
}

TEST_CASE("spectrum and phase") {
  Spectrum s = spectrum({0.0, 3.0, 5.0});
  CHECK(s.e_minus == Complex(-4.0));
  CHECK(s.e_plus == Complex(4.0));
  CHECK(s.phase == PTPhase::Unbroken);

  s = spectrum({1.0, 3.0, 5.0});
  CHECK(s.e_minus == Complex(-3.0));
  CHECK(s.e_plus == Complex(5.0));

  s = spectrum({0.0, 5.0, 3.0});
  CHECK(s.e_minus == Complex(0.0, -4.0));
  CHECK(s.e_plus == Complex(0.0, 4.0));
  CHECK(s.phase == PTPhase::Broken);

  CHECK(spectrum({0.0, 2.0, 2.0}).phase == PTPhase::Exceptional);
  CHECK(spectrum({0.0, 0.0, 0.0}).phase == PTPhase::Exceptional);
}

TEST_CASE("spectrum matches the eigen oracle on examples") {
  for (const HamiltonianParams p :
       {HamiltonianParams{0, 3, 5}, HamiltonianParams{1, 3, 5}, HamiltonianParams{0, 5, 3}}) {
    const Spectrum s = spectrum(p);
    const EigenPairs e = eigen_oracle(build_hamiltonian(p));
    CHECK(rel(s.e_minus, e.lambda1) < 1e-10);
    CHECK(rel(s.e_plus, e.lambda2) < 1e-10);
  }
}

TEST_CASE("corrected_vectors") {
  CorrectedBasis basis = corrected_vectors({0.0, 3.0, 5.0});
  CHECK(dist(basis.r_plus, 0.9) < 1e-15);
  CHECK(dist(basis.r_minus, 0.1) < 1e-15);
  CHECK(dist(basis.phi_minus, Vec2C{0.9486832980505138, Complex(0, -0.31622776601683794)}) <
        1e-15);
  CHECK_FALSE(basis.warnings.coalescent);
  CHECK_FALSE(basis.warnings.out_of_domain);

  // b = 0 reduces to the axis vectors of a diagonal matrix
  basis = corrected_vectors({1.5, 0.0, 2.0});
  CHECK(basis.r_plus == Complex(1.0));
  CHECK(basis.r_minus == Complex(0.0));
  CHECK(dist(basis.phi_minus, Vec2C{1.0, 0.0}) == 0.0);
  CHECK(eigen_residual(build_hamiltonian({1.5, 0.0, 2.0}), basis.phi_minus, 1.5 - 2.0) == 0.0);
  CHECK(basis.warnings.out_of_domain);

  // s = 0: R+- = 1/2 and phi_+ = i phi_-
  basis = corrected_vectors({0.0, 2.0, 2.0});
  CHECK(basis.r_plus == Complex(0.5));
  CHECK(basis.r_minus == Complex(0.5));
  CHECK(dist(basis.phi_plus, kI * basis.phi_minus) < 1e-15);
  CHECK(basis.warnings.coalescent);

  CHECK(error_kind([] { (void)corrected_vectors({1.0, 2.0, 0.0}); }) ==
        ErrorKind::DegenerateParameter);
}

TEST_CASE("legacy_vectors") {
  LegacyBasis basis = legacy_vectors({0.0, 3.0, 5.0});
  CHECK(basis.r == Complex(3.0));
  CHECK(basis.psi_minus == Vec2C{1.0, Complex(0, -3)});
  CHECK(dist(basis.psi_plus, Vec2C{1.0, Complex(0, -1.0 / 3.0)}) < 1e-16);

  basis = legacy_vectors({0.0, 5.0, 3.0});
  CHECK(dist(basis.r, Complex(0.6, 0.8)) < 1e-15);

  CHECK(error_kind([] { (void)legacy_vectors({1.0, 0.0, 2.0}); }) ==
        ErrorKind::DegenerateParameter);
}

TEST_CASE("eigen_residual") {
  const HamiltonianParams p{0.0, 3.0, 5.0};
  const Mat2C h = build_hamiltonian(p);
  const CorrectedBasis corrected = corrected_vectors(p);
  const LegacyBasis legacy = legacy_vectors(p);

  CHECK(eigen_residual(h, corrected.phi_minus, -4.0) <= 1e-14);
  // H psi_- = (4, -12i) = +4 psi_-, so against -4 the residual is 8
  CHECK(std::abs(eigen_residual(h, legacy.psi_minus, -4.0) - 8.0) < 1e-14);
  CHECK(eigen_residual(h, legacy.psi_minus, 4.0) <= 1e-15);

  CHECK(error_kind([&] { (void)eigen_residual(h, Vec2C{}, 1.0); }) == ErrorKind::ZeroVector);
}

TEST_CASE("model properties on random parameters") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> any(-10.0, 10.0);
  std::uniform_real_distribution<double> pos(0.0, 10.0);

  for (int i = 0; i < 20000; ++i) {
    const HamiltonianParams p{any(rng), any(rng), any(rng)};
    if (std::abs(p.discriminant()) < 1e-6) continue;
    const Spectrum s = spectrum(p);
    const double det = p.a * p.a - p.c * p.c + p.b * p.b;
    CHECK(rel(s.e_minus + s.e_plus, 2.0 * p.a) < 1e-13);
    CHECK(std::abs(s.e_minus * s.e_plus - det) <= 1e-13 * (1.0 + std::abs(p.a * p.a) + p.b * p.b + p.c * p.c));
    if (s.phase == PTPhase::Unbroken) {
      CHECK(s.e_minus.imag() == 0.0);
      CHECK(s.e_plus.imag() == 0.0);
    } else if (s.phase == PTPhase::Broken) {
      CHECK(s.e_plus == std::conj(s.e_minus));
    }
    // b r = c + s
    const LegacyBasis legacy = legacy_vectors(p);
    CHECK(rel(p.b * legacy.r, p.c + s.s) < 1e-13);
  }

  const AntilinearOp pt = pt_operator();
  for (int i = 0; i < 20000; ++i) {
    const HamiltonianParams p{any(rng), pos(rng), pos(rng)};
    if (std::abs(p.b - p.c) < 1e-3 || p.b == 0.0 || p.c == 0.0) continue;
    const Mat2C h = build_hamiltonian(p);
    const double bound = 1e-12 * (1.0 + frobenius_norm(h));
    const Spectrum s = spectrum(p);
    const CorrectedBasis corrected = corrected_vectors(p);
    const LegacyBasis legacy = legacy_vectors(p);
    CHECK(eigen_residual(h, corrected.phi_minus, s.e_minus) <= bound);
    CHECK(eigen_residual(h, corrected.phi_plus, s.e_plus) <= bound);
    CHECK(eigen_residual(h, legacy.psi_minus, s.e_plus) <= bound);
    CHECK(eigen_residual(h, legacy.psi_plus, s.e_minus) <= bound);
    if (s.phase == PTPhase::Unbroken) {
      CHECK(dist(apply(pt, corrected.phi_minus), Complex(-1.0) * corrected.phi_minus) <= 1e-12);
      CHECK(dist(apply(pt, corrected.phi_plus), corrected.phi_plus) <= 1e-12);
    }
  }
}
