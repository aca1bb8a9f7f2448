#pragma once

#include <cstdint>
#include <vector>

#include "basket3/rational.hpp"

namespace basket3 {

// Quasi-smooth hypersurface of degree d in P(w0..w4). Only the numerology is
// modeled: Hilbert-series coefficients and the volume d a^3 / prod(w_i).
struct WeightedHypersurface {
  std::vector<std::int64_t> weights;  // sorted ascending, size 5
  std::int64_t degree = 0;
  std::int64_t amplitude = 0;  // d - sum(w_i)
};

// Validates: five positive weights, amplitude >= 1, and well-formedness
// (every four of the five weights are coprime). Throws std::invalid_argument.
WeightedHypersurface make_wps(std::vector<std::int64_t> weights, std::int64_t degree);

// Coefficient of t^(m*a) in (1 - t^d) / prod_i (1 - t^(w_i)).
std::int64_t poincare_coeff(const WeightedHypersurface& h, std::int64_t m);

Rat wps_volume(const WeightedHypersurface& h);

}  // namespace basket3
