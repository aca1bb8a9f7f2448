#pragma once

#include <cstdint>
#include <vector>

#include "basket3/basket.hpp"

namespace basket3 {

// Unique maximal unpacking into pairs of type (1, m). Preserves sigma and
// Delta^3, Delta^4; equals step_basket(b, 0).
Basket initial_basket(const Basket& basket);

// n-th member B^(n) of the canonical sequence: entries with slope in S^(n)
// are kept, all others split across their enclosing Farey neighbors.
Basket step_basket(const Basket& basket, int n);

// Number of level-n prime packings in the step B^(n-1) > B^(n). Both
// characterizations (new (j, n) entries of B^(n) with j > 1, and the drop
// Delta^n(B^(n-1)) - Delta^n(B^(n))) are computed and must agree; a mismatch
// throws std::logic_error since it can only come from an implementation bug.
std::int64_t epsilon(const Basket& basket, int n);

struct CanonicalStep {
  int level = 0;
  Basket basket;
  std::int64_t eps = 0;  // meaningful for level >= 5
};

struct CanonicalSequence {
  Basket base;
  std::vector<CanonicalStep> steps;  // levels 0, 5, 6, ..., upto
  int stabilization_level = 0;       // smallest n with B^(n) = base
};

CanonicalSequence sequence(const Basket& basket, int upto);

}  // namespace basket3
