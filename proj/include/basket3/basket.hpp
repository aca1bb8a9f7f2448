#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "basket3/rational.hpp"

namespace basket3 {

// One terminal quotient singularity type 1/r(1,-1,b), written as the pair
// (b, r). Canonical form: 0 < b < r, gcd(b, r) = 1 and 2b <= r.
struct Pair {
  std::int64_t b = 0;
  std::int64_t r = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
};

bool is_canonical_pair(const Pair& p);

// Entry order used throughout: slope b/r descending, ties by r ascending.
bool pair_before(const Pair& a, const Pair& b);

struct Entry {
  Pair pair;
  std::int64_t mult = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Immutable multiset of canonical pairs. Entries are kept sorted in the
// canonical order and never share a (b, r); the empty basket is valid.
class Basket {
 public:
  Basket() = default;

  // entries may be unsorted / repeated; multiplicities are merged. Every
  // pair must already be canonical (use canonicalize() for raw input).
  static Basket from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t distinct() const { return entries_.size(); }
  std::int64_t weight() const;                 // total multiplicity
  std::int64_t mult_of(const Pair& p) const;   // 0 if absent
  std::int64_t max_r() const;                  // 0 for the empty basket

  std::string to_string() const;               // e.g. "{5x(1,2),(3,7)}"

  friend bool operator==(const Basket&, const Basket&) = default;
  friend bool operator<(const Basket& a, const Basket& b);

 private:
  std::vector<Entry> entries_;
};

// Raw triple (b, r, mult) as found in input files.
using RawPair = std::array<std::int64_t, 3>;

// Reduces generalized pairs (mb, mr) -> m x (b, r) and merges multiplicities.
// Throws std::invalid_argument when b >= r, mult <= 0, or the reduced slope
// exceeds 1/2 (the convention leaves such pairs undefined, so they are
// rejected rather than normalized silently).
Basket canonicalize(const std::vector<RawPair>& raw);

// Multiplicity-wise union.
Basket union_baskets(const Basket& a, const Basket& b);

// Delta^n(b, r) = delta*b*n - (delta^2+delta)/2 * r with delta = floor(bn/r).
// Non-negative for every canonical pair and n >= 2.
std::int64_t delta_pair(const Pair& p, std::int64_t n);

// Multiplicity-weighted sum of delta_pair over the basket.
std::int64_t delta(const Basket& basket, std::int64_t n);

std::int64_t sigma(const Basket& basket);  // sum of b_i
Rat sigma_prime(const Basket& basket);     // sum of b_i^2 / r_i, exact

// Riemann-Roch correction l(m) = sum_Q sum_{j=1}^{m-1} jb(r - jb)/(2r)
// with jb taken mod r.
Rat rr_correction(const Basket& basket, std::int64_t m);

// Replaces one copy each of e1 and e2 by (b1+b2, r1+r2); a non-coprime merge
// gcd-reduces back, so packing two copies of the same entry is an identity.
// Throws std::invalid_argument when the entries are not present.
Basket pack(const Basket& basket, const Pair& e1, const Pair& e2);

struct PrimePackingInfo {
  bool prime = false;
  std::int64_t level = 0;  // r1 + r2
};

// Prime means |b1 r2 - b2 r1| = 1.
PrimePackingInfo is_prime_packing(const Pair& e1, const Pair& e2);

// All unordered entry pairs of the basket forming a prime packing of the
// given level, ordered by the merged slope descending.
std::vector<std::pair<Pair, Pair>> prime_packing_candidates(const Basket& basket,
                                                            std::int64_t level);

}  // namespace basket3
