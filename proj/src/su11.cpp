#include "lacsu11/su11.hpp"

#include <cmath>

#include "lacsu11/errors.hpp"

namespace lacsu11 {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double norm_sq(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }
}  // namespace

CoefficientPair make_coefficient(Complex B) {
  if (!std::isfinite(B.real()) || !std::isfinite(B.imag())) {
    throw ValidationError("make_coefficient: B must be finite");
  }
  return CoefficientPair{std::sqrt(1.0 + norm_sq(B)), B};
}

CoefficientPair coefficient_from_f(Complex F) {
  if (!std::isfinite(F.real()) || !std::isfinite(F.imag())) {
    throw ValidationError("coefficient_from_f: F must be finite");
  }
  const double f2 = norm_sq(F);
  if (f2 >= 1.0) {
    throw std::domain_error("coefficient_from_f: |F| must be < 1");
  }
  const double A = 1.0 / std::sqrt(1.0 - f2);
  return CoefficientPair{A, F * A};
}

Complex unit_phase(std::int64_t m, double t) {
  // Split m*t into a rounded product plus the fma remainder, then reduce
  // mod 1 before multiplying by 2*pi. Keeps the phase accurate even when
  // m*t is large enough that a ulp of the product exceeds 1e-12.
  const double md = static_cast<double>(m);
  const double p = md * t;
  const double err = std::fma(md, t, -p);
  double frac = p - std::floor(p);
  frac += err;
  frac -= std::floor(frac);
  const double phase = kTwoPi * frac;
  return Complex{std::cos(phase), std::sin(phase)};
}

SU11Matrix factor_at(const CoefficientPair& c, std::int64_t m, double t) {
  return SU11Matrix{Complex{c.A, 0.0}, c.B * unit_phase(m, t)};
}

SU11Matrix mul(const SU11Matrix& g1, const SU11Matrix& g2) {
  // [[a1,b1],[b1*,a1*]] * [[a2,b2],[b2*,a2*]]
  return SU11Matrix{g1.a * g2.a + g1.b * std::conj(g2.b),
                    g1.a * g2.b + g1.b * std::conj(g2.a)};
}

SU11Matrix inverse(const SU11Matrix& g) {
  return SU11Matrix{std::conj(g.a), -g.b};
}

Mat2 to_mat2(const SU11Matrix& g) {
  return Mat2{g.a, g.b, std::conj(g.b), std::conj(g.a)};
}

double op_norm(const Mat2& m) {
  const double tr = norm_sq(m.m00) + norm_sq(m.m01) + norm_sq(m.m10) + norm_sq(m.m11);
  const double det = std::abs(m.m00 * m.m11 - m.m01 * m.m10);
  const double disc = std::max(tr * tr - 4.0 * det * det, 0.0);
  return std::sqrt(0.5 * (tr + std::sqrt(disc)));
}

double rho(const SU11Matrix& g1, const SU11Matrix& g2) {
  const SU11Matrix q = mul(inverse(g1), g2);
  const Mat2 d{q.a - 1.0, q.b, std::conj(q.b), std::conj(q.a) - 1.0};
  return std::log1p(op_norm(d));
}

double rho_explicit(const SU11Matrix& g) {
  return std::log1p(std::abs(g.a - 1.0) + std::abs(g.b));
}

double rho_pointwise(Complex a1, Complex b1, Complex a2, Complex b2,
                     const Tolerances& tol) {
  const auto check = [&](Complex a, Complex b) {
    const double lhs = norm_sq(a) - norm_sq(b);
    if (std::abs(lhs - 1.0) > tol.matrix_invariant * std::max(1.0, norm_sq(a))) {
      throw std::domain_error("rho_pointwise: pair violates |a|^2 - |b|^2 = 1");
    }
  };
  check(a1, b1);
  check(a2, b2);
  // Left invariance: rho(G1, G2) = rho(I, G1^{-1} G2), and the quotient is
  // again in SU(1,1), so the explicit formula applies.
  const SU11Matrix q = mul(inverse(SU11Matrix{a1, b1}), SU11Matrix{a2, b2});
  return rho_explicit(q);
}

}  // namespace lacsu11
