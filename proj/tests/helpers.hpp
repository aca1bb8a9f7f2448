#pragma once

#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

#include "basket3/basket.hpp"

namespace basket3::testing {

inline Basket B(std::initializer_list<RawPair> raw) {
  return canonicalize(std::vector<RawPair>(raw));
}

// Deterministic generator for the property corpora.
struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed = 20240817) : gen(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }

  Pair pair(std::int64_t max_r) {
    while (true) {
      const std::int64_t r = uniform(2, max_r);
      const std::int64_t b = uniform(1, r / 2);
      if (std::gcd(b, r) == 1) return {b, r};
    }
  }

  Basket basket(std::int64_t max_r, std::int64_t max_entries, std::int64_t max_mult = 3) {
    std::vector<Entry> entries;
    const std::int64_t n = uniform(0, max_entries);
    for (std::int64_t i = 0; i < n; ++i) entries.push_back({pair(max_r), uniform(1, max_mult)});
    return Basket::from_entries(std::move(entries));
  }
};

inline std::vector<Pair> all_pairs(std::int64_t max_r) {
  std::vector<Pair> out;
  for (std::int64_t r = 2; r <= max_r; ++r)
    for (std::int64_t b = 1; 2 * b <= r; ++b)
      if (std::gcd(b, r) == 1) out.push_back({b, r});
  return out;
}

}  // namespace basket3::testing
