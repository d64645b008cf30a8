#pragma once

#include <complex>
#include <cstdint>

#include "lacsu11/config.hpp"

namespace lacsu11 {

using Complex = std::complex<double>;

/// One factor of the product: positive A and complex B with A^2 - |B|^2 = 1.
/// The disk parameter F = B/A always satisfies |F| < 1.
struct CoefficientPair {
  double A = 1.0;
  Complex B{0.0, 0.0};

  Complex F() const { return B / A; }
};

/// Construct from B: A = sqrt(1 + |B|^2).
CoefficientPair make_coefficient(Complex B);

/// Construct from the disk parameter F, |F| < 1:
/// A = 1/sqrt(1 - |F|^2), B = F * A.
CoefficientPair coefficient_from_f(Complex F);

/// A matrix [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
struct SU11Matrix {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
};

/// General 2x2 complex matrix, row-major. Used only for norm computations.
struct Mat2 {
  Complex m00, m01, m10, m11;
};

/// The factor [[A, B e^{2 pi i m t}], [conj(B) e^{-2 pi i m t}, A]].
SU11Matrix factor_at(const CoefficientPair& c, std::int64_t m, double t);

SU11Matrix mul(const SU11Matrix& g1, const SU11Matrix& g2);

/// Closed-form inverse [[conj(a), -b], [-conj(b), a]] (determinant is 1).
SU11Matrix inverse(const SU11Matrix& g);

Mat2 to_mat2(const SU11Matrix& g);

/// Largest singular value from the closed-form 2x2 SVD:
/// sigma^2 solves x^2 - tr(M*M) x + |det M|^2 = 0.
double op_norm(const Mat2& m);

/// rho(G1, G2) = log(1 + ||G1^{-1} G2 - I||_op). A left-invariant complete
/// metric on SU(1,1).
double rho(const SU11Matrix& g1, const SU11Matrix& g2);

/// For SU(1,1) matrices the distance to the identity has the explicit form
/// log(1 + |a - 1| + |b|). Cross-checked against the operator-norm route in
/// the test suite.
double rho_explicit(const SU11Matrix& g);

/// rho between the pointwise values (a1, b1) and (a2, b2). Validates the
/// group invariant on both pairs.
double rho_pointwise(Complex a1, Complex b1, Complex a2, Complex b2,
                     const Tolerances& tol = default_tolerances());

/// exp(2 pi i m t) with the product m*t reduced mod 1 in double-double
/// precision, so large integer frequencies do not lose phase accuracy.
Complex unit_phase(std::int64_t m, double t);

}  // namespace lacsu11
