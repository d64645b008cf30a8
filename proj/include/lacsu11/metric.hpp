#pragma once

#include <cstdint>
#include <vector>

#include "lacsu11/config.hpp"
#include "lacsu11/lacunary.hpp"

namespace lacsu11 {

/// Uniform quadrature grid t_k = k / size on the torus.
struct TorusGrid {
  std::int64_t size = 0;
};

/// Value of the d_p metric. For p >= 1 this is the L^p norm of
/// t -> rho(g1(t), g2(t)); for 0 < p < 1 it is the p-th power of the
/// quasinorm, matching the metric convention on that range.
struct DpValue {
  double p = 1.0;
  double value = 0.0;
  bool pth_power = false;  // true iff p < 1
};

/// Grid needed to resolve both polynomials of a pair: 4 * maxfreq + 4.
std::int64_t required_grid(const TrigPolyPair& pair);
TorusGrid auto_grid(const TrigPolyPair& pair);

/// d_p(g1, g2) evaluated pointwise on the grid from the two polynomial
/// pairs. Throws GridError when the grid is below the resolution bound of
/// either pair.
DpValue d_p_between(const TrigPolyPair& left, const TrigPolyPair& right,
                    double p, TorusGrid grid);

/// d_p(I, product over (M, N]). Computes the quotient window product from
/// the coefficients (left invariance) instead of manipulating the two full
/// partial products.
DpValue d_p_window(const CoefficientSequence& coeffs,
                   const LacunarySequence& freqs, int M, int N, double p,
                   TorusGrid grid, const Limits& limits = default_limits());

/// Same integrand, returning the integral of rho^p (no final root). This is
/// the left-hand side of the Chebyshev bound for p >= 1.
double d_p_pow_window(const CoefficientSequence& coeffs,
                      const LacunarySequence& freqs, int M, int N, double p,
                      TorusGrid grid, const Limits& limits = default_limits());

/// rho(g1(t), g2(t)) sampled at each grid point, for profile output.
std::vector<double> rho_profile(const TrigPolyPair& left,
                                const TrigPolyPair& right, TorusGrid grid);

/// C_p = int_0^inf 4 dalpha / (e^{alpha^{1/p}} - 1)^2, finite for p > 2.
/// Computed by the substitution alpha = u^p, adaptive Gauss-Kronrod on a
/// finite interval, and an analytic tail bound; the result is cached per
/// (p, rel_tol). Throws domain_error for p <= 2.
double c_p(double p, double rel_tol = 1e-8);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = true;
};

/// d_p(g_M, g_N)^p <= (e^{S_{M,N}} - 1) * C_p for p > 2, with the relative
/// slack from the tolerance record.
BoundCheck cauchy_bound_check(const CoefficientSequence& coeffs,
                              const LacunarySequence& freqs, int M, int N,
                              double p, TorusGrid grid,
                              const Tolerances& tol = default_tolerances(),
                              const Limits& limits = default_limits());

struct EnergyCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// Shifted-window energy identity:
///   int (|a_{M,N} - prod A_j|^2 + |b_{M,N}|^2) = prod(A^2+|B|^2) - prod A^2,
/// evaluated exactly on the coefficient level.
EnergyCheck shifted_energy_check(const CoefficientSequence& coeffs,
                                 const LacunarySequence& freqs, int M, int N,
                                 const Limits& limits = default_limits());

}  // namespace lacsu11
