#include "basket3/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace basket3 {

WeightedHypersurface make_wps(std::vector<std::int64_t> weights, std::int64_t degree) {
  if (weights.size() != 5) throw std::invalid_argument("wps: exactly five weights expected");
  for (std::int64_t w : weights)
    if (w <= 0) throw std::invalid_argument("wps: weights must be positive");
  std::sort(weights.begin(), weights.end());
  // well-formed iff every four of the five weights are coprime
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != skip) g = std::gcd(g, weights[i]);
    if (g != 1) throw std::invalid_argument("wps: weights are not well-formed (common factor)");
  }
  const std::int64_t sum = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  const std::int64_t a = degree - sum;
  if (a < 1) throw std::invalid_argument("wps: amplitude d - sum(w) must be >= 1");
  return {std::move(weights), degree, a};
}

std::int64_t poincare_coeff(const WeightedHypersurface& h, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("poincare_coeff: m >= 0 required");
  const std::int64_t deg = m * h.amplitude;
  // partition counts with parts w_i, up to t^deg
  std::vector<std::int64_t> coef(static_cast<std::size_t>(deg) + 1, 0);
  coef[0] = 1;
  for (std::int64_t w : h.weights)
    for (std::int64_t i = w; i <= deg; ++i)
      coef[static_cast<std::size_t>(i)] += coef[static_cast<std::size_t>(i - w)];
  std::int64_t value = coef[static_cast<std::size_t>(deg)];
  if (deg >= h.degree) value -= coef[static_cast<std::size_t>(deg - h.degree)];
  return value;
}

Rat wps_volume(const WeightedHypersurface& h) {
  Int prod = 1;
  for (std::int64_t w : h.weights) prod *= w;
  return Rat(Int(h.degree) * h.amplitude * h.amplitude * h.amplitude, prod);
}

}  // namespace basket3
