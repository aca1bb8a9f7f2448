#pragma once

#include <cstdint>
#include <vector>

#include "basket3/basket.hpp"
#include "basket3/rational.hpp"

namespace basket3 {

// A basket together with chi(O) and chi_2. All chi_m and K^3 are formal
// consequences; nothing here claims geometric realizability.
struct FormalBasket {
  Basket basket;
  std::int64_t chi = 0;
  std::int64_t chi2 = 0;
};

// chi_2 .. chi_mmax; values[m - 2] = chi_m.
struct ChiVector {
  std::int64_t chi = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int m) const;  // throws std::out_of_range outside [2, mmax]
  int mmax() const { return static_cast<int>(values.size()) + 1; }
};

// K^3 = -sigma + sigma' + 6 chi + 2 chi_2.
Rat k3(const FormalBasket& fb);

// chi_m for 2 <= m <= mmax by the inductive rewriting of Riemann-Roch:
//   chi_2 = chi2,  chi_3 = -sigma + 10 chi + 5 chi2,
//   chi_{m+1} - chi_m = m^2/2 (K^3 - sigma') + m/2 sigma - 2 chi + Delta^m.
// Every value must come out an integer; a fractional step throws
// std::logic_error (it cannot happen for integral formal baskets).
ChiVector chi_seq(const FormalBasket& fb, int mmax);

// Independent evaluation path: the closed formula
//   chi_m = 1/12 m(m-1)(2m-1) K^3 - (2m-1) chi + l(m).
std::int64_t chi_closed(const FormalBasket& fb, int m);

}  // namespace basket3
