#pragma once

#include <cstdint>
#include <vector>

#include "basket3/basket.hpp"

namespace basket3 {

// The level set S^(n) of reduced slopes in (0, 1/2], materialized down to
// 1/(rmax+1). Level 0 is the tail {1/m}; level n adds {i/n : 2 <= i <= n/2}.
// Fractions are stored as canonical pairs, slope descending.
struct FareyLevel {
  int level = 0;
  int rmax = 2;
  std::vector<Pair> fractions;
};

FareyLevel farey_level(int n, int rmax);

struct NeighborResult {
  bool member = false;
  Pair lower{};  // largest level fraction < slope (unset when member)
  Pair upper{};  // smallest level fraction > slope
};

// Enclosing interval endpoints of a reduced slope in (0, 1/2]. Throws
// std::out_of_range when the slope lies below the truncation cutoff.
NeighborResult neighbors(const FareyLevel& level, const Pair& slope);

// Consecutive fractions v1/u1 < v2/u2 are unimodular: u1 v2 - u2 v1 = 1.
bool verify_unimodular(const FareyLevel& level);

}  // namespace basket3
