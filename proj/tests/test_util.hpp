#pragma once

// Shared helpers for the test suites: seeded generators for coefficient
// families and SU(1,1) elements. Tests must stay deterministic, so every
// generator takes an explicit engine.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lacsu11/lacunary.hpp"
#include "lacsu11/su11.hpp"

namespace lacsu11::testing {

inline double u01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * u01(eng);
}

inline Complex random_disk(std::mt19937_64& eng, double lo, double hi) {
  return std::polar(uniform(eng, lo, hi), 2.0 * M_PI * u01(eng));
}

/// Random coefficient sequence with |F_j| drawn from [lo, hi).
inline CoefficientSequence random_coefficients(std::mt19937_64& eng, int count,
                                               double lo, double hi) {
  CoefficientSequence out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    out.push_back(coefficient_from_f(random_disk(eng, lo, hi)));
  }
  return out;
}

/// Random SU(1,1) element with moderate entries (|F| <= 0.9).
inline SU11Matrix random_su11(std::mt19937_64& eng) {
  const CoefficientPair c = coefficient_from_f(random_disk(eng, 0.0, 0.9));
  const Complex phase = std::polar(1.0, 2.0 * M_PI * u01(eng));
  return SU11Matrix{Complex{c.A, 0.0}, c.B * phase};
}

}  // namespace lacsu11::testing
