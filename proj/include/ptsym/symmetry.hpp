#pragma once

// C, P, T, PT and CPT operators of the two-level model and the structural
// checks run against them.

#include <array>
#include <string_view>

#include "ptsym/cxmat.hpp"
#include "ptsym/hamiltonian.hpp"

namespace ptsym {

/// How the bra <phi| is formed in a completeness sum.
enum class ConjugationConvention { Hermitian, Transpose };

std::string_view to_string(ConjugationConvention conv);

struct InvolutionReport {
  double square_residual = 0.0;  // |X^2 - I|
  std::array<Complex, 2> eigenvalues{};
};

struct ParityReconstruction {
  Mat2C matrix;
  double residual = 0.0;  // |matrix - diag(-1, 1)|
};

/// (1/s) [[c, -ib], [-ib, -c]]. Throws ExceptionalPoint when
/// |c^2 - b^2| <= 1e-14 (b^2 + c^2).
Mat2C c_operator(const HamiltonianParams& p);

/// [[0, -i/r], [ir, 0]] with r = (c + s)/b. Throws DegenerateParameter for b = 0.
Mat2C legacy_c_operator(const HamiltonianParams& p);

Mat2C parity();
AntilinearOp time_reversal();
AntilinearOp pt_operator();
/// C o P o T. Throws ExceptionalPoint like c_operator.
AntilinearOp cpt_operator(const HamiltonianParams& p);

/// sum_i |phi_i><phi_i| over the corrected basis.
Mat2C completeness_sum(const CorrectedBasis& basis, ConjugationConvention conv);

/// C (sum_i |phi_i><phi_i|)^-1 and its distance to diag(-1, 1).
/// Throws SingularSum when |det(sum)| <= 1e-14, ExceptionalPoint from c_operator.
ParityReconstruction reconstruct_parity(const HamiltonianParams& p, ConjugationConvention conv);

InvolutionReport involution_check(const Mat2C& x);

/// |P H P^-1 - H^dagger|. Throws SingularMatrix when det P = 0.
double pseudo_hermiticity_residual(const Mat2C& h, const Mat2C& p);

}  // namespace ptsym
