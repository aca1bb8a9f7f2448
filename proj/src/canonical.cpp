#include "basket3/canonical.hpp"

#include <stdexcept>
#include <string>

#include "basket3/farey.hpp"

namespace basket3 {

Basket step_basket(const Basket& basket, int n) {
  if (n < 0) throw std::invalid_argument("step_basket: n >= 0 required");
  if (basket.empty()) return basket;
  const FareyLevel level = farey_level(n, static_cast<int>(basket.max_r()));
  std::vector<Entry> out;
  for (const Entry& e : basket.entries()) {
    const NeighborResult nb = neighbors(level, e.pair);
    if (nb.member) {
      out.push_back(e);
      continue;
    }
    const auto [q1, p1] = nb.lower;  // q1/p1 < b/r < q2/p2
    const auto [q2, p2] = nb.upper;
    const std::int64_t c1 = e.pair.r * q2 - e.pair.b * p2;
    const std::int64_t c2 = -e.pair.r * q1 + e.pair.b * p1;
    if (c1 <= 0 || c2 <= 0)
      throw std::logic_error("step_basket: non-positive unpacking coefficient");
    out.push_back({{q1, p1}, c1 * e.mult});
    out.push_back({{q2, p2}, c2 * e.mult});
  }
  return Basket::from_entries(std::move(out));
}

Basket initial_basket(const Basket& basket) { return step_basket(basket, 0); }

std::int64_t epsilon(const Basket& basket, int n) {
  if (n < 5) throw std::invalid_argument("epsilon: n >= 5 required");
  const Basket bn = step_basket(basket, n);
  const Basket bn1 = step_basket(basket, n - 1);
  std::int64_t count = 0;
  for (const Entry& e : bn.entries())
    if (e.pair.r == n && e.pair.b > 1) count += e.mult;
  const std::int64_t drop = delta(bn1, n) - delta(bn, n);
  if (count != drop)
    throw std::logic_error("epsilon: characterizations disagree at level " + std::to_string(n) +
                           " (" + std::to_string(count) + " vs " + std::to_string(drop) + ")");
  return count;
}

CanonicalSequence sequence(const Basket& basket, int upto) {
  CanonicalSequence seq;
  seq.base = basket;
  seq.steps.push_back({0, initial_basket(basket), 0});
  for (int n = 5; n <= upto; ++n) seq.steps.push_back({n, step_basket(basket, n), epsilon(basket, n)});
  seq.stabilization_level = 0;
  if (!(seq.steps.front().basket == basket)) {
    const int bound = static_cast<int>(basket.max_r());
    int n = 5;
    while (n <= bound && !(step_basket(basket, n) == basket)) ++n;
    if (n > bound) throw std::logic_error("sequence: no stabilization up to max r");
    seq.stabilization_level = n;
  }
  return seq;
}

}  // namespace basket3
