#include "basket3/basket.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace basket3 {

bool is_canonical_pair(const Pair& p) {
  return p.b > 0 && p.r > p.b && 2 * p.b <= p.r && std::gcd(p.b, p.r) == 1;
}

bool pair_before(const Pair& a, const Pair& b) {
  const std::int64_t lhs = a.b * b.r;
  const std::int64_t rhs = b.b * a.r;
  if (lhs != rhs) return lhs > rhs;  // slope descending
  return a.r < b.r;
}

Basket Basket::from_entries(std::vector<Entry> entries) {
  for (const Entry& e : entries) {
    if (!is_canonical_pair(e.pair))
      throw std::invalid_argument("non-canonical pair (" + std::to_string(e.pair.b) + "," +
                                  std::to_string(e.pair.r) + ")");
    if (e.mult < 0) throw std::invalid_argument("negative multiplicity");
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return pair_before(a.pair, b.pair); });
  Basket out;
  for (const Entry& e : entries) {
    if (e.mult == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().pair == e.pair)
      out.entries_.back().mult += e.mult;
    else
      out.entries_.push_back(e);
  }
  return out;
}

std::int64_t Basket::weight() const {
  std::int64_t w = 0;
  for (const Entry& e : entries_) w += e.mult;
  return w;
}

std::int64_t Basket::mult_of(const Pair& p) const {
  for (const Entry& e : entries_)
    if (e.pair == p) return e.mult;
  return 0;
}

std::int64_t Basket::max_r() const {
  std::int64_t m = 0;
  for (const Entry& e : entries_) m = std::max(m, e.pair.r);
  return m;
}

std::string Basket::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Entry& e : entries_) {
    if (!first) os << ',';
    first = false;
    if (e.mult != 1) os << e.mult << 'x';
    os << '(' << e.pair.b << ',' << e.pair.r << ')';
  }
  os << '}';
  return os.str();
}

bool operator<(const Basket& a, const Basket& b) {
  const auto& x = a.entries_;
  const auto& y = b.entries_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].pair != y[i].pair) return pair_before(x[i].pair, y[i].pair);
    if (x[i].mult != y[i].mult) return x[i].mult < y[i].mult;
  }
  return x.size() < y.size();
}

Basket canonicalize(const std::vector<RawPair>& raw) {
  std::vector<Entry> entries;
  entries.reserve(raw.size());
  for (const RawPair& t : raw) {
    std::int64_t b = t[0], r = t[1], mult = t[2];
    if (b <= 0 || r <= 0 || mult <= 0)
      throw std::invalid_argument("pair fields must be positive");
    if (b >= r) throw std::invalid_argument("require b < r");
    const std::int64_t g = std::gcd(b, r);
    b /= g;
    r /= g;
    if (2 * b > r)
      throw std::invalid_argument("slope " + std::to_string(b) + "/" + std::to_string(r) +
                                  " exceeds 1/2");
    entries.push_back({{b, r}, mult * g});
  }
  return Basket::from_entries(std::move(entries));
}

Basket union_baskets(const Basket& a, const Basket& b) {
  std::vector<Entry> entries = a.entries();
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return Basket::from_entries(std::move(entries));
}

std::int64_t delta_pair(const Pair& p, std::int64_t n) {
  if (!is_canonical_pair(p)) throw std::invalid_argument("delta_pair: non-canonical pair");
  if (n < 2) throw std::invalid_argument("delta_pair: n >= 2 required");
  const std::int64_t d = (p.b * n) / p.r;
  return d * p.b * n - (d * d + d) / 2 * p.r;
}

std::int64_t delta(const Basket& basket, std::int64_t n) {
  std::int64_t sum = 0;
  for (const Entry& e : basket.entries()) sum += e.mult * delta_pair(e.pair, n);
  return sum;
}

std::int64_t sigma(const Basket& basket) {
  std::int64_t sum = 0;
  for (const Entry& e : basket.entries()) sum += e.mult * e.pair.b;
  return sum;
}

Rat sigma_prime(const Basket& basket) {
  Rat sum = 0;
  for (const Entry& e : basket.entries())
    sum += Rat(Int(e.mult) * e.pair.b * e.pair.b, Int(e.pair.r));
  return sum;
}

Rat rr_correction(const Basket& basket, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("rr_correction: m >= 2 required");
  Rat total = 0;
  for (const Entry& e : basket.entries()) {
    const std::int64_t r = e.pair.r;
    std::int64_t num = 0;  // accumulates 2r * l_Q(m)
    for (std::int64_t j = 1; j < m; ++j) {
      const std::int64_t jb = (j * e.pair.b) % r;
      num += jb * (r - jb);
    }
    total += Rat(Int(e.mult) * num, Int(2 * r));
  }
  return total;
}

Basket pack(const Basket& basket, const Pair& e1, const Pair& e2) {
  const std::int64_t need1 = (e1 == e2) ? 2 : 1;
  if (basket.mult_of(e1) < need1 || (e1 != e2 && basket.mult_of(e2) < 1))
    throw std::invalid_argument("pack: entry not present with sufficient multiplicity");
  std::vector<Entry> entries;
  for (const Entry& e : basket.entries()) {
    std::int64_t m = e.mult;
    if (e.pair == e1) m -= 1;
    if (e.pair == e2) m -= 1;
    if (m > 0) entries.push_back({e.pair, m});
  }
  std::int64_t b = e1.b + e2.b, r = e1.r + e2.r;
  const std::int64_t g = std::gcd(b, r);
  entries.push_back({{b / g, r / g}, g});
  return Basket::from_entries(std::move(entries));
}

PrimePackingInfo is_prime_packing(const Pair& e1, const Pair& e2) {
  const std::int64_t det = e1.b * e2.r - e2.b * e1.r;
  return {det == 1 || det == -1, e1.r + e2.r};
}

std::vector<std::pair<Pair, Pair>> prime_packing_candidates(const Basket& basket,
                                                            std::int64_t level) {
  std::vector<std::pair<Pair, Pair>> out;
  const auto& es = basket.entries();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const Pair &p = es[i].pair, &q = es[j].pair;
      if (p.r + q.r != level) continue;
      if (is_prime_packing(p, q).prime) out.emplace_back(p, q);
    }
  // merged slopes (b1+b2)/level are distinct across candidates; sort descending
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first.b + x.second.b > y.first.b + y.second.b;
  });
  return out;
}

}  // namespace basket3
