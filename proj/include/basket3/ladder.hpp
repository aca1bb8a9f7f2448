#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "basket3/basket.hpp"
#include "basket3/formal.hpp"

namespace basket3 {

// Everything the rewritten Riemann-Roch system determines from a chi-vector
// (chi, chi_2..chi_13) and a chosen initial-basket tail n0_{1,r}, r >= 5.
// eps9/eps10/eps12 are reported at eta = 0; eta enters them with
// coefficients +1, -1, +1 and is bounded by [eta_min, eta_max].
struct InversionLadder {
  std::int64_t tau = 0;    // sigma' - K^3
  std::int64_t sigma = 0;
  std::array<std::int64_t, 10> deltas{};  // Delta^3 .. Delta^12
  std::int64_t n0_12 = 0, n0_13 = 0, n0_14 = 0;
  std::vector<std::int64_t> n0_tail;      // n0_{1,5}, n0_{1,6}, ...
  std::int64_t sigma5 = 0;
  std::int64_t eps = 0;    // n0_{1,5} + 2 sum_{r>=6} n0_{1,r}
  std::int64_t eps5 = 0, eps6 = 0, eps7 = 0, eps8 = 0;
  std::int64_t eps9 = 0, eps10 = 0, eps12 = 0;  // at eta = 0
  std::int64_t eta_min = 0, eta_max = 0;        // feasible eta window (may be empty)
  std::int64_t Rterm = 0;
  bool eps6_is_zero = false;
  std::vector<std::string> violations;  // failed non-negativity constraints
  bool consistent = false;              // no violations and eps6 == 0
};

// Pure evaluation; constraint failures land in .violations, never throw.
InversionLadder rr_invert(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail);

// Counts of the four ambiguous prime-packing types:
//   eta:   {(1,3),(1,4)} > {(2,7)}     (level 7)
//   zeta:  {(1,2),(3,7)} > {(4,9)}     (level 9)
//   alpha: {(1,2),(4,9)} > {(5,11)}    (level 11)
//   beta:  {(1,3),(3,8)} > {(4,11)}    (level 11)
struct PackingChoice {
  std::int64_t eta = 0, zeta = 0, alpha = 0, beta = 0;
};

struct AssembledLadder {
  bool ok = false;
  // set when !ok: first negative coefficient found
  int fail_level = 0;
  Pair fail_pair{};
  std::int64_t fail_coeff = 0;

  Basket b5, b7;
  bool deep = false;  // Assumption (chi2 = 0, n0_{1,r} = 0 for r >= 6) held
  Basket b8, b9, b10, b11, b12;
  std::int64_t eps5 = 0, eps7 = 0, eps8 = 0, eps9 = 0, eps10 = 0, eps11 = 0, eps12 = 0;
};

// Explicit baskets B^(5), B^(7) by the general closed formulas; B^(8)..B^(12)
// additionally when the chi2 = 0, n0_{1,r>=6} = 0 assumption holds. A negative
// coefficient marks the (cv, pc) combination infeasible.
AssembledLadder assemble_ladder(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail,
                                const PackingChoice& pc);

// chi2 = 0 and n0_{1,r} = 0 for all r >= 6; gates the deep closed forms.
bool deep_ladder_applies(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail);

struct FinitenessInequality {
  std::int64_t lhs = 0, rhs = 0, R = 0;
  bool holds = false;
};

// 2chi_5 + 3chi_6 + chi_8 + chi_10 + chi_12 >=
//     chi + 10chi_2 + 4chi_3 + chi_7 + chi_11 + chi_13 + R.
FinitenessInequality finiteness_inequality(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail);

}  // namespace basket3
