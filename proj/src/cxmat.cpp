#include "ptsym/cxmat.hpp"

#include <cmath>
#include <utility>

#include "ptsym/error.hpp"

namespace ptsym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorKind::SingularSum: return "SingularSum";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroVector: return "ZeroVector";
  }
  return "Unknown";
}

Vec2C operator+(const Vec2C& u, const Vec2C& v) { return {u.x0 + v.x0, u.x1 + v.x1}; }
Vec2C operator-(const Vec2C& u, const Vec2C& v) { return {u.x0 - v.x0, u.x1 - v.x1}; }
Vec2C operator*(Complex alpha, const Vec2C& v) { return {alpha * v.x0, alpha * v.x1}; }
Vec2C conj(const Vec2C& v) { return {std::conj(v.x0), std::conj(v.x1)}; }

double norm(const Vec2C& v) { return std::hypot(std::abs(v.x0), std::abs(v.x1)); }

Complex inner(const Vec2C& u, const Vec2C& v) {
  return std::conj(u.x0) * v.x0 + std::conj(u.x1) * v.x1;
}

Vec2C normalized(const Vec2C& v) {
  const double n = norm(v);
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  return Complex(1.0 / n) * v;
}

Mat2C operator+(const Mat2C& a, const Mat2C& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

Mat2C operator-(const Mat2C& a, const Mat2C& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

Mat2C operator*(const Mat2C& a, const Mat2C& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Mat2C operator*(Complex alpha, const Mat2C& a) {
  return {alpha * a.m00, alpha * a.m01, alpha * a.m10, alpha * a.m11};
}

Vec2C operator*(const Mat2C& a, const Vec2C& v) {
  return {a.m00 * v.x0 + a.m01 * v.x1, a.m10 * v.x0 + a.m11 * v.x1};
}

Mat2C conj(const Mat2C& a) {
  return {std::conj(a.m00), std::conj(a.m01), std::conj(a.m10), std::conj(a.m11)};
}

Mat2C transpose(const Mat2C& a) { return {a.m00, a.m10, a.m01, a.m11}; }

Mat2C adjoint(const Mat2C& a) { return conj(transpose(a)); }

Mat2C inverse(const Mat2C& a, double abs_tol) {
  const Complex d = a.det();
  if (std::abs(d) <= abs_tol) {
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  }
  const Complex inv = 1.0 / d;
  return {inv * a.m11, -inv * a.m01, -inv * a.m10, inv * a.m00};
}

Mat2C outer(const Vec2C& u, const Vec2C& v) {
  return outer_transpose(u, conj(v));
}

Mat2C outer_transpose(const Vec2C& u, const Vec2C& v) {
  return {u.x0 * v.x0, u.x0 * v.x1, u.x1 * v.x0, u.x1 * v.x1};
}

Mat2C commutator(const Mat2C& a, const Mat2C& b) { return a * b - b * a; }

double frobenius_norm(const Mat2C& a) {
  const double s = std::norm(a.m00) + std::norm(a.m01) + std::norm(a.m10) + std::norm(a.m11);
  return std::sqrt(s);
}

namespace {

bool lex_less(Complex x, Complex y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

// Unit vector perpendicular (bilinearly) to the dominant row of A - lambda I.
// `fallback` is returned when A - lambda I is exactly zero.
Vec2C kernel_vector(const Mat2C& a, Complex lambda, const Vec2C& fallback) {
  const Mat2C shifted = a - Mat2C::diag(lambda, lambda);
  const Vec2C row0{shifted.m00, shifted.m01};
  const Vec2C row1{shifted.m10, shifted.m11};
  const Vec2C& row = norm(row0) >= norm(row1) ? row0 : row1;
  if (norm(row) == 0.0) return fallback;
  return normalized(Vec2C{row.x1, -row.x0});
}

}  // namespace

EigenPairs eigen_oracle(const Mat2C& a) {
  // Roots of lambda^2 - tr lambda + det. The discriminant tr^2/4 - det is
  // evaluated as ((m00 - m11)/2)^2 + m01 m10, which is the same polynomial
  // without the cancellation against the squared trace.
  const Complex half_trace = 0.5 * a.trace();
  const Complex half_gap = 0.5 * (a.m00 - a.m11);
  const Complex root = std::sqrt(half_gap * half_gap + a.m01 * a.m10);

  Complex l1 = half_trace - root;
  Complex l2 = half_trace + root;
  if (lex_less(l2, l1)) std::swap(l1, l2);

  EigenPairs out;
  out.lambda1 = l1;
  out.lambda2 = l2;
  out.v1 = kernel_vector(a, l1, {1.0, 0.0});
  out.v2 = kernel_vector(a, l2, {0.0, 1.0});

  const double scale = 1.0 + frobenius_norm(a);
  out.defective = std::abs(l1 - l2) <= 1e-9 * scale &&
                  std::abs(inner(out.v1, out.v2)) > 1.0 - 1e-9;
  return out;
}

Vec2C apply(const AntilinearOp& op, const Vec2C& v) {
  return op.conjugates ? op.m * conj(v) : op.m * v;
}

AntilinearOp compose(const AntilinearOp& lhs, const AntilinearOp& rhs) {
  // M_A K M_B = M_A conj(M_B) K
  const Mat2C m = lhs.conjugates ? lhs.m * conj(rhs.m) : lhs.m * rhs.m;
  return {m, lhs.conjugates != rhs.conjugates};
}

AntilinearOp inverse(const AntilinearOp& op) {
  // (M K)^-1 = K M^-1 = conj(M^-1) K
  const Mat2C minv = inverse(op.m);
  return {op.conjugates ? conj(minv) : minv, op.conjugates};
}

Mat2C similarity(const AntilinearOp& u, const Mat2C& x) {
  const AntilinearOp conjugated = compose(compose(u, {x, false}), inverse(u));
  return conjugated.m;
}

}  // namespace ptsym
