#include "ptsym/symmetry.hpp"

#include <cmath>

#include "ptsym/error.hpp"

namespace ptsym {

std::string_view to_string(ConjugationConvention conv) {
  return conv == ConjugationConvention::Hermitian ? "hermitian" : "transpose";
}

Mat2C c_operator(const HamiltonianParams& p) {
  if (p.at_exceptional_point()) {
    throw Error(ErrorKind::ExceptionalPoint, "C operator diverges at the exceptional point");
  }
  const Complex inv_s = 1.0 / discriminant_root(p);
  const Complex mib{0.0, -p.b};
  return inv_s * Mat2C{p.c, mib, mib, -p.c};
}

Mat2C legacy_c_operator(const HamiltonianParams& p) {
  const Complex r = legacy_vectors(p).r;
  return {0.0, -kI / r, kI * r, 0.0};
}

Mat2C parity() { return Mat2C::diag(-1.0, 1.0); }

AntilinearOp time_reversal() { return AntilinearOp::conjugation(); }

AntilinearOp pt_operator() {
  return compose({parity(), false}, time_reversal());
}

AntilinearOp cpt_operator(const HamiltonianParams& p) {
  return compose({c_operator(p), false}, pt_operator());
}

Mat2C completeness_sum(const CorrectedBasis& basis, ConjugationConvention conv) {
  if (conv == ConjugationConvention::Hermitian) {
    return outer(basis.phi_minus, basis.phi_minus) + outer(basis.phi_plus, basis.phi_plus);
  }
  return outer_transpose(basis.phi_minus, basis.phi_minus) +
         outer_transpose(basis.phi_plus, basis.phi_plus);
}

ParityReconstruction reconstruct_parity(const HamiltonianParams& p, ConjugationConvention conv) {
  const Mat2C sum = completeness_sum(corrected_vectors(p), conv);
  if (std::abs(sum.det()) <= 1e-14) {
    throw Error(ErrorKind::SingularSum, "completeness sum is singular");
  }
  ParityReconstruction out;
  out.matrix = c_operator(p) * inverse(sum);
  out.residual = frobenius_norm(out.matrix - parity());
  return out;
}

InvolutionReport involution_check(const Mat2C& x) {
  const EigenPairs eig = eigen_oracle(x);
  return {frobenius_norm(x * x - Mat2C::identity()), {eig.lambda1, eig.lambda2}};
}

double pseudo_hermiticity_residual(const Mat2C& h, const Mat2C& p) {
  return frobenius_norm(p * h * inverse(p) - adjoint(h));
}

}  // namespace ptsym
