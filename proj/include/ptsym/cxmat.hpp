#pragma once

// Fixed-size complex linear algebra: 2-vectors, 2x2 matrices, antilinear
// operators (matrix composed with complex conjugation) and a closed-form
// eigen solver used as an independent cross-check.

#include <complex>

namespace ptsym {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

struct Vec2C {
  Complex x0{};
  Complex x1{};

  friend bool operator==(const Vec2C&, const Vec2C&) = default;
};

Vec2C operator+(const Vec2C& u, const Vec2C& v);
Vec2C operator-(const Vec2C& u, const Vec2C& v);
Vec2C operator*(Complex alpha, const Vec2C& v);
Vec2C conj(const Vec2C& v);

double norm(const Vec2C& v);
/// Hermitian inner product, antilinear in the first argument.
Complex inner(const Vec2C& u, const Vec2C& v);
/// Scales v to unit Hermitian norm. Throws ZeroVector for v = 0.
Vec2C normalized(const Vec2C& v);

struct Mat2C {
  Complex m00{};
  Complex m01{};
  Complex m10{};
  Complex m11{};

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C zero() { return {}; }
  static Mat2C diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

  Complex trace() const { return m00 + m11; }
  Complex det() const { return m00 * m11 - m01 * m10; }

  friend bool operator==(const Mat2C&, const Mat2C&) = default;
};

Mat2C operator+(const Mat2C& a, const Mat2C& b);
Mat2C operator-(const Mat2C& a, const Mat2C& b);
Mat2C operator*(const Mat2C& a, const Mat2C& b);
Mat2C operator*(Complex alpha, const Mat2C& a);
Vec2C operator*(const Mat2C& a, const Vec2C& v);

Mat2C conj(const Mat2C& a);
Mat2C transpose(const Mat2C& a);
Mat2C adjoint(const Mat2C& a);
/// Throws SingularMatrix when |det| <= abs_tol.
Mat2C inverse(const Mat2C& a, double abs_tol = 0.0);

/// Outer product |u><v| with v conjugated (Hermitian bra).
Mat2C outer(const Vec2C& u, const Vec2C& v);
/// Outer product u v^T with no conjugation.
Mat2C outer_transpose(const Vec2C& u, const Vec2C& v);

Mat2C commutator(const Mat2C& a, const Mat2C& b);
double frobenius_norm(const Mat2C& a);

struct EigenPairs {
  Complex lambda1;
  Vec2C v1;
  Complex lambda2;
  Vec2C v2;
  bool defective = false;
};

/// Closed-form eigendecomposition of a 2x2 matrix.
///
/// Eigenvalues are the roots of the characteristic quadratic, taken with the
/// principal square root of the discriminant and ordered by (re, im)
/// ascending. Each eigenvector is the unit kernel vector of (A - lambda I)
/// perpendicular to its row of larger norm; when A - lambda I vanishes the
/// axis vectors are used. `defective` is set when the eigenvalues coincide
/// to 1e-9 (1 + |A|) and the two kernel vectors are parallel to 1e-9.
EigenPairs eigen_oracle(const Mat2C& a);

/// A linear map v -> m v, or an antilinear map v -> m conj(v).
struct AntilinearOp {
  Mat2C m = Mat2C::identity();
  bool conjugates = false;

  /// Complex conjugation K.
  static AntilinearOp conjugation() { return {Mat2C::identity(), true}; }
};

Vec2C apply(const AntilinearOp& op, const Vec2C& v);
/// Operator composition (lhs after rhs).
AntilinearOp compose(const AntilinearOp& lhs, const AntilinearOp& rhs);
AntilinearOp inverse(const AntilinearOp& op);
/// U X U^-1 for a linear X, as a linear matrix.
Mat2C similarity(const AntilinearOp& u, const Mat2C& x);

}  // namespace ptsym
