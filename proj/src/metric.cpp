#include "lacsu11/metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lacsu11/errors.hpp"

namespace lacsu11 {

namespace {

double rho_from_values(Complex a1, Complex b1, Complex a2, Complex b2) {
  // quotient G1^{-1} G2 stays in SU(1,1); explicit distance formula applies
  const Complex aq = std::conj(a1) * a2 - b1 * std::conj(b2);
  const Complex bq = std::conj(a1) * b2 - b1 * std::conj(a2);
  return std::log1p(std::abs(aq - 1.0) + std::abs(bq));
}

void require_grid(const TrigPolyPair& pair, TorusGrid grid, const char* who) {
  const std::int64_t need = required_grid(pair);
  if (grid.size < need) {
    throw GridError(std::string(who) + ": grid of " + std::to_string(grid.size) +
                    " points is below the required " + std::to_string(need));
  }
}

DpValue finish_dp(double p, double mean_rho_p) {
  if (p >= 1.0) {
    return DpValue{p, std::pow(mean_rho_p, 1.0 / p), false};
  }
  return DpValue{p, mean_rho_p, true};
}

}  // namespace

std::int64_t required_grid(const TrigPolyPair& pair) {
  return 4 * std::max(pair.a.max_abs_freq(), pair.b.max_abs_freq()) + 4;
}

TorusGrid auto_grid(const TrigPolyPair& pair) {
  return TorusGrid{required_grid(pair)};
}

DpValue d_p_between(const TrigPolyPair& left, const TrigPolyPair& right,
                    double p, TorusGrid grid) {
  if (!(p > 0.0)) throw ValidationError("d_p: p must be positive");
  require_grid(left, grid, "d_p_between");
  require_grid(right, grid, "d_p_between");
  const auto aL = evaluate_on_grid(left.a, grid.size);
  const auto bL = evaluate_on_grid(left.b, grid.size);
  const auto aR = evaluate_on_grid(right.a, grid.size);
  const auto bR = evaluate_on_grid(right.b, grid.size);
  KahanSum acc;
  for (std::int64_t k = 0; k < grid.size; ++k) {
    const auto i = static_cast<std::size_t>(k);
    acc.add(std::pow(rho_from_values(aL[i], bL[i], aR[i], bR[i]), p));
  }
  return finish_dp(p, acc.value() / static_cast<double>(grid.size));
}

double d_p_pow_window(const CoefficientSequence& coeffs,
                      const LacunarySequence& freqs, int M, int N, double p,
                      TorusGrid grid, const Limits& limits) {
  if (!(p > 0.0)) throw ValidationError("d_p: p must be positive");
  const TrigPolyPair pair = partial_product(coeffs, freqs, M, N, limits);
  require_grid(pair, grid, "d_p_window");
  const auto a = evaluate_on_grid(pair.a, grid.size);
  const auto b = evaluate_on_grid(pair.b, grid.size);
  KahanSum acc;
  for (std::int64_t k = 0; k < grid.size; ++k) {
    const auto i = static_cast<std::size_t>(k);
    acc.add(std::pow(std::log1p(std::abs(a[i] - 1.0) + std::abs(b[i])), p));
  }
  return acc.value() / static_cast<double>(grid.size);
}

DpValue d_p_window(const CoefficientSequence& coeffs,
                   const LacunarySequence& freqs, int M, int N, double p,
                   TorusGrid grid, const Limits& limits) {
  return finish_dp(p, d_p_pow_window(coeffs, freqs, M, N, p, grid, limits));
}

std::vector<double> rho_profile(const TrigPolyPair& left,
                                const TrigPolyPair& right, TorusGrid grid) {
  require_grid(left, grid, "rho_profile");
  require_grid(right, grid, "rho_profile");
  const auto aL = evaluate_on_grid(left.a, grid.size);
  const auto bL = evaluate_on_grid(left.b, grid.size);
  const auto aR = evaluate_on_grid(right.a, grid.size);
  const auto bR = evaluate_on_grid(right.b, grid.size);
  std::vector<double> out(static_cast<std::size_t>(grid.size));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = rho_from_values(aL[i], bL[i], aR[i], bR[i]);
  }
  return out;
}

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double lo, double hi, double& result, double& err) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const double fs = f(c - x) + f(c + x);
    res_k += kWgk[i] * fs;
    if (i % 2 == 1) res_g += kWg[i / 2] * fs;
  }
  result = res_k * h;
  err = std::abs(res_k - res_g) * h;
}

template <typename F>
double adaptive_gk(const F& f, double lo, double hi, double abs_tol, int depth) {
  double result = 0.0, err = 0.0;
  gk15(f, lo, hi, result, err);
  if (err <= abs_tol || depth >= 80) return result;
  const double mid = 0.5 * (lo + hi);
  return adaptive_gk(f, lo, mid, 0.5 * abs_tol, depth + 1) +
         adaptive_gk(f, mid, hi, 0.5 * abs_tol, depth + 1);
}

double cp_compute(double p, double rel_tol) {
  // After alpha = u^p the integrand is 4 p u^{p-1} / (e^u - 1)^2; a second
  // substitution u = v^s flattens the u^{p-3} endpoint behavior.
  const int s = std::clamp(static_cast<int>(std::ceil(4.0 / (p - 2.0))), 2, 512);
  const double sd = static_cast<double>(s);

  double U = std::max(3.0 * p + 30.0, 45.0);
  const auto tail_bound = [&](double u0) {
    // for u >= u0: (e^u - 1)^2 >= e^{2u} (1 - e^{-u0})^2 and
    // u^{p-1} e^{-u} is decreasing once u0 >= p - 1
    const double denom = -std::expm1(-u0);
    return 4.0 * p * std::pow(u0, p - 1.0) * std::exp(-2.0 * u0) / (denom * denom);
  };

  const auto integrand = [&](double v) -> double {
    if (v <= 0.0) return 0.0;
    const double u = std::pow(v, sd);
    if (u > 30.0) {
      // log form; avoids inf/inf for large v^s
      const double log_h = std::log(4.0 * p * sd) + (sd * p - 1.0) * std::log(v) -
                           2.0 * (u + std::log1p(-std::exp(-u)));
      return std::exp(log_h);
    }
    const double e = std::expm1(u);
    return 4.0 * p * sd * std::pow(v, sd * p - 1.0) / (e * e);
  };

  const double V = std::pow(U, 1.0 / sd);
  // coarse pass to set the absolute tolerance for refinement
  double crude = 0.0;
  for (int seg = 0; seg < 8; ++seg) {
    double r = 0.0, e = 0.0;
    gk15(integrand, V * seg / 8.0, V * (seg + 1) / 8.0, r, e);
    crude += r;
  }
  const double abs_tol = 0.5 * rel_tol * std::max(crude, 1e-12);
  double total = 0.0;
  for (int seg = 0; seg < 8; ++seg) {
    total += adaptive_gk(integrand, V * seg / 8.0, V * (seg + 1) / 8.0,
                         abs_tol / 8.0, 0);
  }
  if (tail_bound(U) > 0.5 * rel_tol * total) {
    throw std::logic_error("c_p: tail bound unexpectedly large");
  }
  return total;
}

}  // namespace

double c_p(double p, double rel_tol) {
  if (!(p > 2.0)) {
    throw std::domain_error("c_p: the integral diverges for p <= 2");
  }
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw ValidationError("c_p: rel_tol must lie in (0, 1e-2]");
  }
  static std::map<std::pair<double, double>, double> cache;
  static std::mutex mutex;
  const std::pair<double, double> key{p, rel_tol};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const double value = cp_compute(p, rel_tol);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

BoundCheck cauchy_bound_check(const CoefficientSequence& coeffs,
                              const LacunarySequence& freqs, int M, int N,
                              double p, TorusGrid grid, const Tolerances& tol,
                              const Limits& limits) {
  if (!(p > 2.0)) {
    throw std::domain_error("cauchy_bound_check: requires p > 2");
  }
  BoundCheck bc;
  bc.lhs = d_p_pow_window(coeffs, freqs, M, N, p, grid, limits);
  bc.rhs = std::expm1(s_mn(coeffs, M, N)) * c_p(p);
  bc.ok = bc.lhs <= bc.rhs * (1.0 + tol.bound_slack);
  return bc;
}

EnergyCheck shifted_energy_check(const CoefficientSequence& coeffs,
                                 const LacunarySequence& freqs, int M, int N,
                                 const Limits& limits) {
  const TrigPolyPair pair = partial_product(coeffs, freqs, M, N, limits);
  EnergyCheck ec;
  KahanSum centered;
  for (const auto& t : pair.a.terms()) {
    if (t.freq != 0) centered.add(std::norm(t.coeff));
  }
  ec.lhs = centered.value() + l2_norm_sq(pair.b);
  ec.rhs = energy_product(coeffs, M, N) - a_sq_product(coeffs, M, N);
  if (ec.rhs <= 0.0) {
    ec.residual = ec.lhs == 0.0 ? 0.0 : ec.lhs;
  } else {
    ec.residual = std::abs(ec.lhs - ec.rhs) / ec.rhs;
  }
  return ec;
}

}  // namespace lacsu11
