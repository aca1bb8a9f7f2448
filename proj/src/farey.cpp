#include "basket3/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace basket3 {

namespace {

bool slope_less(const Pair& a, const Pair& b) { return a.b * b.r < b.b * a.r; }

}  // namespace

FareyLevel farey_level(int n, int rmax) {
  if (n < 0 || rmax < 2) throw std::invalid_argument("farey_level: need n >= 0, rmax >= 2");
  FareyLevel out{n, rmax, {}};
  // tail 1/m, truncated at 1/(rmax+1)
  for (std::int64_t m = 2; m <= rmax + 1; ++m) out.fractions.push_back({1, m});
  for (std::int64_t k = 5; k <= n; ++k)
    for (std::int64_t i = 2; 2 * i <= k; ++i) {
      if (std::gcd(i, k) != 1) continue;
      if (i * (rmax + 1) < k) continue;  // below cutoff
      out.fractions.push_back({i, k});
    }
  std::sort(out.fractions.begin(), out.fractions.end(), pair_before);
  out.fractions.erase(std::unique(out.fractions.begin(), out.fractions.end()),
                      out.fractions.end());
  return out;
}

NeighborResult neighbors(const FareyLevel& level, const Pair& slope) {
  if (!is_canonical_pair(slope)) throw std::invalid_argument("neighbors: non-canonical slope");
  const auto& fr = level.fractions;
  if (fr.empty() || slope_less(slope, fr.back()))
    throw std::out_of_range("neighbors: slope below truncation cutoff");
  // descending order: first element <= slope
  auto it = std::lower_bound(fr.begin(), fr.end(), slope, [](const Pair& a, const Pair& b) {
    return !slope_less(a, b) && !(a == b);  // a > b
  });
  if (it != fr.end() && *it == slope) return {true, {}, {}};
  // *it < slope < *(it-1); slope = 1/2 is always a member so it != begin
  return {false, *it, *(it - 1)};
}

bool verify_unimodular(const FareyLevel& level) {
  const auto& fr = level.fractions;
  for (std::size_t i = 0; i + 1 < fr.size(); ++i) {
    const Pair &hi = fr[i], &lo = fr[i + 1];
    if (lo.r * hi.b - hi.r * lo.b != 1) return false;
  }
  return true;
}

}  // namespace basket3
