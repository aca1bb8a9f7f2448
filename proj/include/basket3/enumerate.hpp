#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "basket3/basket.hpp"
#include "basket3/formal.hpp"
#include "basket3/ladder.hpp"

namespace basket3 {

// Search space of the finiteness theorem: chi in [chi_min, min(chi_max, 8)],
// P_m <= pm_cap for m <= 12, initial-basket tails with sigma <= sigma_cap and
// n0_{1,r} = 0 for r >= n0_zero_from. The two geometric filters (gcd lemma
// and plurigenus superadditivity) are inputs from geometry, not basket
// arithmetic; both are toggleable and default on. enforce_eps6 exists only
// for the ablation self-test.
struct Constraints {
  int chi_min = 2;
  int chi_max = 8;
  int pm_cap = 1;
  bool require_p2_zero = true;
  bool apply_gcd_lemma = true;
  bool apply_superadditivity = true;
  int sigma_cap = 85;
  int n0_zero_from = 9;
  bool enforce_eps6 = true;
  int workers = 0;  // 0: take BASKET3_WORKERS from the environment, default 1
};

struct ClosureMember {
  Basket basket;
  Rat k3;
  std::vector<std::int64_t> p;  // chi_2..chi_24, p[m-2]
  bool minimal_positive = false;
};

struct DescendantSummary {
  std::int64_t positive_count = 0;
  std::int64_t min_p10 = 0;
  std::int64_t min_p24 = 0;
  Rat min_k3;
  std::vector<ClosureMember> members;  // K^3 > 0 members, canonical order
};

// One level-n prime-packing type performed `count` times; `merged` is the new
// (j, n) pair the type packs into.
struct LevelChoice {
  int level = 0;
  Pair merged{};
  std::int64_t count = 0;

  friend bool operator==(const LevelChoice&, const LevelChoice&) = default;
};

struct CandidateRecord {
  std::int64_t chi = 0, chi2 = 0;
  std::vector<std::int64_t> p;          // chi_2..chi_24 of the formal basket (b12, chi, chi2)
  std::vector<std::int64_t> nominal_p;  // chi_2..chi_13 the branch was enumerated under;
                                        // equals p[0..11] unless eps6 enforcement was ablated
  std::vector<std::int64_t> n0_tail;    // n0_{1,5} ..
  PackingChoice pc;                   // eta/zeta/alpha/beta view of level_choices
  std::vector<LevelChoice> level_choices;
  Basket b12;
  Rat k3_b12;
  int d = -1;  // min m with P_m > 0, -1 when absent
  DescendantSummary descendants;
};

struct Violation {
  std::string kind;  // "p12_zero" | "p24_counterexample" | "p24_min_pair"
  std::int64_t chi = 0, chi2 = 0;
  Basket basket;
  std::vector<std::int64_t> p;
};

struct SearchStats {
  std::uint64_t branches = 0;   // (cv, tail, chi_13) combinations descended
  std::uint64_t assembled = 0;  // level-12 baskets reached
  double wall_ms = 0;
};

struct SearchReport {
  std::string check;  // "enumerate" | "p12" | "p24"
  Constraints constraints;
  std::vector<CandidateRecord> candidates;
  std::vector<Violation> violations;
  SearchStats stats;
  std::optional<Rat> min_k3;  // over every K^3 > 0 closure member
  bool pass = true;
  std::string order_key = "chi,chi2,b12";
};

// Smallest m >= 2 with P_m > 0 within the vector's horizon, -1 when none.
int minimal_d(const std::vector<std::int64_t>& p);

// P_m = P_n = P_lcm = 1 with lcm(m,n) <= horizon forces P_gcd = 1. Instances
// with gcd(m,n) = 1 force P_1 = 1, which is impossible when P_1 is known to
// vanish (P_2 = 0 forces that); they are skipped otherwise.
bool gcd_filter(const std::vector<std::int64_t>& p, int horizon);

// A nonzero section of mK embeds H^0(nK) into H^0((m+n)K), so P_m >= 1
// implies P_{m+n} >= P_n. Applies to vectors read as actual plurigenera.
bool superadditive_filter(const std::vector<std::int64_t>& p, int horizon);

std::vector<CandidateRecord> enumerate_candidates(const Constraints& c);

// Closure of b12 under prime packings of level >= 13, pruned at K^3 <= 0
// (packing never increases K^3, so the pruning loses nothing positive).
DescendantSummary descend(const Basket& b12, std::int64_t chi, std::int64_t chi2);

SearchReport run_enumeration(const Constraints& c);
SearchReport verify_p12(const Constraints& c);
SearchReport verify_p24(const Constraints& c);

// All formal baskets (B, chi, chi2) with K^3 > 0 whose chi-vector reproduces
// the given chi_2..chi_13 exactly (no P_m caps; used to recover a basket
// from plurigenus data, e.g. the weighted-hypersurface fixture).
std::vector<std::pair<Basket, Rat>> recover_baskets(std::int64_t chi, std::int64_t chi2,
                                                    const std::vector<std::int64_t>& chi2to13,
                                                    int max_tail_r = 9);

}  // namespace basket3
