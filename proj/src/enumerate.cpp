#include "basket3/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "basket3/canonical.hpp"

namespace basket3 {

namespace {

using Cv = std::array<std::int64_t, 14>;  // cv[m] = chi_m for m = 2..13

ChiVector to_chi_vector(std::int64_t chi, const Cv& cv) {
  ChiVector v;
  v.chi = chi;
  v.values.assign(cv.begin() + 2, cv.end());
  return v;
}

std::vector<std::int64_t> p_slice(const Cv& cv, int hi) {
  return {cv.begin() + 2, cv.begin() + 2 + (hi - 1)};
}

// Everything produced by one (cv, tail, eta..) branch before descendants.
struct BranchOut {
  std::int64_t chi = 0, chi2 = 0;
  Cv cv{};
  std::vector<std::int64_t> tail;
  std::vector<LevelChoice> choices;
  Basket b12;
  Rat k3v;
};

bool meta_before(const BranchOut& a, const BranchOut& b) {
  if (a.cv != b.cv) return a.cv < b.cv;
  if (a.tail != b.tail) return a.tail < b.tail;
  const auto key = [](const LevelChoice& lc) {
    return std::tuple(lc.level, lc.merged.b, lc.merged.r, lc.count);
  };
  return std::lexicographical_compare(a.choices.begin(), a.choices.end(), b.choices.begin(),
                                      b.choices.end(),
                                      [&](const LevelChoice& x, const LevelChoice& y) {
                                        return key(x) < key(y);
                                      });
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("enumerate: invariant failed: ") + what);
}

// Performs exactly (Delta^level - target) prime packings per level, levels 5
// through 12, enumerating every split across the available packing types.
// The closed-form drop counts of the rewritten Riemann-Roch system are
// asserted against the structural ones on every branch.
struct LevelDescent {
  const InversionLadder* L = nullptr;
  bool enforce_eps6 = true;
  std::uint64_t* assembled = nullptr;
  std::function<void(const Basket&, const std::vector<LevelChoice>&,
                     const std::vector<std::pair<int, Basket>>&)>
      sink;

  std::vector<LevelChoice> choices;
  std::vector<std::pair<int, Basket>> chain;

  void run(const Basket& b0) {
    chain.push_back({0, b0});
    at_level(b0, 5, 0);
    chain.pop_back();
  }

  void at_level(const Basket& cur, int level, std::int64_t eta_so_far) {
    if (level > 12) {
      if (assembled) ++*assembled;
      sink(cur, choices, chain);
      return;
    }
    const std::int64_t dn = delta(cur, level) - L->deltas[static_cast<std::size_t>(level - 3)];
    if (level == 6) {
      // S^(6) = S^(5): no level-6 packings exist, the drop must vanish.
      // With the identity ablated the mismatch is deliberately ignored.
      if (enforce_eps6) check(dn == 0, "eps6 drop nonzero");
      chain.push_back({level, cur});
      at_level(cur, 7, eta_so_far);
      chain.pop_back();
      return;
    }
    if (dn < 0) return;
    switch (level) {  // the closed-form drop counts must match the structural ones
      case 5: check(dn == L->eps5, "eps5 mismatch"); break;
      case 7: check(dn == L->eps7, "eps7 mismatch"); break;
      case 8: check(dn == L->eps8, "eps8 mismatch"); break;
      case 9: check(dn == L->eps9 + eta_so_far, "eps9 mismatch"); break;
      case 10: check(dn == L->eps10 - eta_so_far, "eps10 mismatch"); break;
      case 12: check(dn == L->eps12 + eta_so_far, "eps12 mismatch"); break;
      default: break;
    }
    if (dn == 0) {
      chain.push_back({level, cur});
      at_level(cur, level + 1, eta_so_far);
      chain.pop_back();
      return;
    }
    const auto types = prime_packing_candidates(cur, level);
    if (types.empty()) return;
    std::vector<std::int64_t> counts(types.size(), 0);
    split(cur, level, eta_so_far, dn, types, counts, 0);
  }

  void split(const Basket& cur, int level, std::int64_t eta_so_far, std::int64_t remaining,
             const std::vector<std::pair<Pair, Pair>>& types, std::vector<std::int64_t>& counts,
             std::size_t i) {
    if (i + 1 == types.size()) {
      counts[i] = remaining;
      apply(cur, level, eta_so_far, types, counts);
      counts[i] = 0;
      return;
    }
    for (std::int64_t c = 0; c <= remaining; ++c) {
      counts[i] = c;
      split(cur, level, eta_so_far, remaining - c, types, counts, i + 1);
    }
    counts[i] = 0;
  }

  void apply(const Basket& cur, int level, std::int64_t eta_so_far,
             const std::vector<std::pair<Pair, Pair>>& types,
             const std::vector<std::int64_t>& counts) {
    // aggregate feasibility; products have denominator `level`, so nothing
    // consumed here is produced here
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> used;
    for (std::size_t t = 0; t < types.size(); ++t) {
      used[{types[t].first.b, types[t].first.r}] += counts[t];
      used[{types[t].second.b, types[t].second.r}] += counts[t];
    }
    for (const auto& [key, cnt] : used)
      if (cur.mult_of({key.first, key.second}) < cnt) return;

    std::vector<Entry> entries = cur.entries();
    std::size_t n_choices = 0;
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (counts[t] == 0) continue;
      const auto& [e1, e2] = types[t];
      for (Entry& e : entries) {
        if (e.pair == e1) e.mult -= counts[t];
        if (e.pair == e2) e.mult -= counts[t];
      }
      entries.push_back({{e1.b + e2.b, e1.r + e2.r}, counts[t]});
      choices.push_back({level, {e1.b + e2.b, e1.r + e2.r}, counts[t]});
      ++n_choices;
      if (level == 7 && e1.b + e2.b == 2) eta_so_far += counts[t];
    }
    Basket next = Basket::from_entries(std::move(entries));
    chain.push_back({level, next});
    at_level(next, level + 1, eta_so_far);
    chain.pop_back();
    choices.resize(choices.size() - n_choices);
  }
};

struct TailGen {
  // tails n0_{1,r}, r = 5..zero_from-1
  static std::vector<std::vector<std::int64_t>> with_eps(std::int64_t eps_target, int zero_from) {
    std::vector<std::vector<std::int64_t>> out;
    const int parts = std::max(0, zero_from - 6);  // r = 6..zero_from-1
    if (eps_target < 0) return out;
    for (std::int64_t t5 = eps_target; t5 >= 0; t5 -= 2) {
      const std::int64_t half = (eps_target - t5) / 2;
      std::vector<std::int64_t> tail(static_cast<std::size_t>(parts) + 1, 0);
      tail[0] = t5;
      emit(tail, 1, half, out);
    }
    return out;
  }

  static std::vector<std::vector<std::int64_t>> free_up_to(std::int64_t sigma5_cap,
                                                           int zero_from) {
    std::vector<std::vector<std::int64_t>> out;
    const int parts = std::max(0, zero_from - 5);
    for (std::int64_t s = 0; s <= sigma5_cap; ++s) {
      std::vector<std::int64_t> tail(static_cast<std::size_t>(parts), 0);
      emit(tail, 0, s, out);
    }
    return out;
  }

 private:
  static void emit(std::vector<std::int64_t>& tail, std::size_t i, std::int64_t left,
                   std::vector<std::vector<std::int64_t>>& out) {
    if (i >= tail.size()) {
      if (left == 0) out.push_back(tail);
      return;
    }
    if (i + 1 == tail.size()) {
      tail[i] = left;
      out.push_back(tail);
      tail[i] = 0;
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      tail[i] = v;
      emit(tail, i + 1, left - v, out);
    }
    tail[i] = 0;
  }
};

int env_workers() {
  if (const char* s = std::getenv("BASKET3_WORKERS")) {
    const int n = std::atoi(s);
    if (n >= 1) return n;
  }
  return 1;
}

struct WorkItem {
  std::int64_t chi;
  std::int64_t p2;
  std::array<std::int64_t, 10> p3to12;
};

std::vector<WorkItem> make_items(const Constraints& c) {
  std::vector<WorkItem> items;
  const int chi_lo = std::max(c.chi_min, 2);
  const int chi_hi = std::min(c.chi_max, 8);
  std::vector<std::int64_t> p2s;
  if (c.require_p2_zero)
    p2s = {0};
  else
    for (std::int64_t v = 0; v <= c.pm_cap; ++v) p2s.push_back(v);
  for (int chi = chi_lo; chi <= chi_hi; ++chi)
    for (std::int64_t p2 : p2s) {
      std::array<std::int64_t, 10> vec{};
      while (true) {
        items.push_back({chi, p2, vec});
        // odometer over P_3..P_12
        std::size_t k = vec.size();
        while (k > 0) {
          if (++vec[k - 1] <= c.pm_cap) break;
          vec[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
  return items;
}

void process_item(const Constraints& c, const WorkItem& item, std::vector<BranchOut>& sink,
                  SearchStats& stats) {
  Cv cv{};
  const std::int64_t chi = item.chi;
  cv[2] = item.p2;
  for (int m = 3; m <= 12; ++m) cv[static_cast<std::size_t>(m)] = item.p3to12[static_cast<std::size_t>(m - 3)];

  const std::int64_t sig = 10 * chi + 5 * cv[2] - cv[3];
  if (sig < 0 || sig > c.sigma_cap) return;
  const std::int64_t eps_target = -3 * cv[2] - cv[3] + cv[4] + cv[5] + cv[6] - cv[7];

  std::vector<std::vector<std::int64_t>> tails;
  if (c.enforce_eps6) {
    tails = TailGen::with_eps(eps_target, c.n0_zero_from);
  } else {
    const std::int64_t cap14 = chi - 3 * cv[2] + cv[3] + 2 * cv[4] - cv[5];
    const std::int64_t cap5 = 2 * chi - cv[3] + 2 * cv[5] - cv[6];
    const std::int64_t cap = std::min(cap14, cap5);
    if (cap < 0) return;
    tails = TailGen::free_up_to(cap, c.n0_zero_from);
  }

  for (const auto& tail : tails) {
    // chi_13 bound from eps12 >= 0 with the largest admissible eta
    cv[13] = 0;
    const InversionLadder L0 = rr_invert(to_chi_vector(chi, cv), tail);
    if (L0.n0_12 < 0 || L0.n0_13 < 0 || L0.n0_14 < 0) continue;
    if (L0.eps5 < 0 || L0.eps7 < 0 || L0.eps8 < 0) continue;
    if (c.enforce_eps6) check(L0.eps6 == 0, "tail generator broke the eps6 identity");
    const std::int64_t p13_max = L0.eps12 + std::max<std::int64_t>(L0.eps7, 0);
    for (std::int64_t p13 = 0; p13 <= p13_max; ++p13) {
      cv[13] = p13;
      const ChiVector cvec = to_chi_vector(chi, cv);
      const InversionLadder L = rr_invert(cvec, tail);
      if (L.eta_min > L.eta_max) continue;
      if (c.apply_gcd_lemma && !gcd_filter(p_slice(cv, 13), 13)) continue;
      if (c.apply_superadditivity && !superadditive_filter(p_slice(cv, 13), 13)) continue;
      ++stats.branches;

      std::vector<Entry> b0e{{{1, 2}, L.n0_12}, {{1, 3}, L.n0_13}, {{1, 4}, L.n0_14}};
      for (std::size_t i = 0; i < tail.size(); ++i)
        b0e.push_back({{1, static_cast<std::int64_t>(5 + i)}, tail[i]});
      const Basket b0 = Basket::from_entries(std::move(b0e));
      check(sigma(b0) == L.sigma, "sigma of B0");

      LevelDescent d;
      d.L = &L;
      d.enforce_eps6 = c.enforce_eps6;
      d.assembled = &stats.assembled;
      d.sink = [&](const Basket& b12, const std::vector<LevelChoice>& choices,
                   const std::vector<std::pair<int, Basket>>& chain) {
        // every surviving basket is cross-checked against the canonical
        // sequence machinery (step idempotence) and against its own chi-vector
        for (const auto& [lvl, basket] : chain)
          check(step_basket(b12, lvl) == basket, "canonical sequence cross-check");
        if (c.enforce_eps6) {
          const ChiVector got = chi_seq({b12, chi, cv[2]}, 13);
          for (int m = 2; m <= 13; ++m)
            check(got.at(m) == cv[static_cast<std::size_t>(m)], "chi-vector round trip");
        }
        const Rat K = k3({b12, chi, cv[2]});
        if (K <= 0) return;
        sink.push_back({chi, cv[2], cv, tail, choices, b12, K});
      };
      d.run(b0);
    }
  }
}

PackingChoice extract_pc(const std::vector<LevelChoice>& choices) {
  PackingChoice pc;
  for (const LevelChoice& lc : choices) {
    if (lc.level == 7 && lc.merged == Pair{2, 7}) pc.eta = lc.count;
    if (lc.level == 9 && lc.merged == Pair{4, 9}) pc.zeta = lc.count;
    if (lc.level == 11 && lc.merged == Pair{5, 11}) pc.alpha = lc.count;
    if (lc.level == 11 && lc.merged == Pair{4, 11}) pc.beta = lc.count;
  }
  return pc;
}

}  // namespace

int minimal_d(const std::vector<std::int64_t>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0) return static_cast<int>(i) + 2;
  return -1;
}

bool gcd_filter(const std::vector<std::int64_t>& p, int horizon) {
  const int hi = std::min<int>(horizon, static_cast<int>(p.size()) + 1);
  const auto P = [&p](int m) { return p[static_cast<std::size_t>(m) - 2]; };
  const bool p1_zero = P(2) == 0;  // a section of K would give one of 2K
  for (int m = 2; m <= hi; ++m)
    for (int n = m + 1; n <= hi; ++n) {
      const int g = std::gcd(m, n);
      const int l = m / g * n;
      if (l > hi) continue;
      if (P(m) != 1 || P(n) != 1 || P(l) != 1) continue;
      if (g == 1) {
        if (p1_zero) return false;  // lemma would force P_1 = 1
        continue;
      }
      if (P(g) != 1) return false;
    }
  return true;
}

bool superadditive_filter(const std::vector<std::int64_t>& p, int horizon) {
  const int hi = std::min<int>(horizon, static_cast<int>(p.size()) + 1);
  const auto P = [&p](int m) { return p[static_cast<std::size_t>(m) - 2]; };
  for (int m = 2; m <= hi; ++m) {
    if (P(m) < 1) continue;
    for (int n = 2; m + n <= hi; ++n)
      if (P(m + n) < P(n)) return false;
  }
  return true;
}

DescendantSummary descend(const Basket& b12, std::int64_t chi, std::int64_t chi2) {
  std::map<Basket, Rat> seen;
  std::deque<Basket> queue;
  const std::size_t depth_cap = static_cast<std::size_t>(b12.weight());

  const auto visit = [&](const Basket& b) {
    if (seen.count(b)) return;
    const Rat K = k3({b, chi, chi2});
    seen.emplace(b, K);
    if (K > 0) queue.push_back(b);
  };
  visit(b12);
  while (!queue.empty()) {
    const Basket cur = queue.front();
    queue.pop_front();
    check(b12.weight() - cur.weight() < static_cast<std::int64_t>(depth_cap),
          "descent depth bound");
    const std::int64_t max_level = 2 * cur.max_r();
    for (std::int64_t lvl = 13; lvl <= max_level; ++lvl)
      for (const auto& [e1, e2] : prime_packing_candidates(cur, lvl)) visit(pack(cur, e1, e2));
  }

  DescendantSummary out;
  for (const auto& [b, K] : seen) {
    if (K <= 0) continue;
    ClosureMember m;
    m.basket = b;
    m.k3 = K;
    const ChiVector cvec = chi_seq({b, chi, chi2}, 24);
    m.p.assign(cvec.values.begin(), cvec.values.end());
    m.minimal_positive = true;
    for (std::int64_t lvl = 13; lvl <= 2 * b.max_r() && m.minimal_positive; ++lvl)
      for (const auto& [e1, e2] : prime_packing_candidates(b, lvl)) {
        const auto it = seen.find(pack(b, e1, e2));
        check(it != seen.end(), "positive member with unexplored child");
        if (it->second > 0) {
          m.minimal_positive = false;
          break;
        }
      }
    out.members.push_back(std::move(m));
  }
  out.positive_count = static_cast<std::int64_t>(out.members.size());
  check(out.positive_count > 0 || k3({b12, chi, chi2}) <= 0, "closure lost its root");
  if (out.positive_count > 0) {
    out.min_p10 = out.members.front().p[8];
    out.min_p24 = out.members.front().p[22];
    out.min_k3 = out.members.front().k3;
    for (const ClosureMember& m : out.members) {
      out.min_p10 = std::min(out.min_p10, m.p[8]);
      out.min_p24 = std::min(out.min_p24, m.p[22]);
      out.min_k3 = std::min(out.min_k3, m.k3);
    }
  }
  return out;
}

std::vector<CandidateRecord> enumerate_candidates(const Constraints& c) {
  return run_enumeration(c).candidates;
}

SearchReport run_enumeration(const Constraints& c) {
  if (c.chi_min < 2) throw std::invalid_argument("constraints: chi_min >= 2 required");
  if (c.pm_cap < 0 || c.sigma_cap < 0 || c.n0_zero_from < 6)
    throw std::invalid_argument("constraints: malformed caps");
  const auto t0 = std::chrono::steady_clock::now();

  SearchReport report;
  report.check = "enumerate";
  report.constraints = c;

  const std::vector<WorkItem> items = make_items(c);
  const int workers = c.workers > 0 ? c.workers : env_workers();

  std::vector<std::vector<BranchOut>> results(items.size());
  std::vector<SearchStats> stats(items.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) process_item(c, items[i], results[i], stats[i]);
  } else {
    std::vector<std::future<void>> futs;
    const std::size_t chunk = (items.size() + static_cast<std::size_t>(workers) - 1) /
                              static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(items.size(), lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) process_item(c, items[i], results[i], stats[i]);
      }));
    }
    for (auto& f : futs) f.get();
  }
  for (const SearchStats& s : stats) {
    report.stats.branches += s.branches;
    report.stats.assembled += s.assembled;
  }

  // dedupe on (chi, chi2, b12, nominal cv); under eps6 enforcement the
  // nominal vector is a function of the rest of the key, so this is the
  // plain (b12, chi) dedupe there. Ties resolve to the smallest witness so
  // the output is independent of worker count and traversal order.
  std::map<std::tuple<std::int64_t, std::int64_t, Basket, Cv>, BranchOut> unique;
  for (const auto& chunk_result : results)
    for (const BranchOut& b : chunk_result) {
      const auto key = std::tuple(b.chi, b.chi2, b.b12, b.cv);
      const auto it = unique.find(key);
      if (it == unique.end())
        unique.emplace(key, b);
      else if (meta_before(b, it->second))
        it->second = b;
    }

  for (const auto& [key, b] : unique) {
    CandidateRecord rec;
    rec.chi = b.chi;
    rec.chi2 = b.chi2;
    rec.n0_tail = b.tail;
    rec.level_choices = b.choices;
    rec.pc = extract_pc(b.choices);
    rec.b12 = b.b12;
    rec.k3_b12 = b.k3v;
    rec.nominal_p.assign(b.cv.begin() + 2, b.cv.end());
    const ChiVector full = chi_seq({b.b12, b.chi, b.chi2}, 24);
    rec.p.assign(full.values.begin(), full.values.end());
    rec.d = minimal_d(rec.p);
    rec.descendants = descend(b.b12, b.chi, b.chi2);
    if (!report.min_k3 || rec.descendants.min_k3 < *report.min_k3)
      report.min_k3 = rec.descendants.min_k3;
    report.candidates.push_back(std::move(rec));
  }

  report.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

SearchReport verify_p12(const Constraints& c) {
  SearchReport report = run_enumeration(c);
  report.check = "p12";
  for (const CandidateRecord& rec : report.candidates)
    if (rec.nominal_p[10] == 0)  // P_12 as enumerated
      report.violations.push_back({"p12_zero", rec.chi, rec.chi2, rec.b12, rec.p});
  report.pass = report.violations.empty();
  return report;
}

SearchReport verify_p24(const Constraints& c) {
  SearchReport report = run_enumeration(c);
  report.check = "p24";
  for (const CandidateRecord& rec : report.candidates) {
    for (const ClosureMember& m : rec.descendants.members) {
      if (m.p[8] > 1 || m.p[22] > 1) continue;  // P_10, P_24
      // a counterexample would be an actual threefold, so its plurigenus
      // vector must clear the geometric filters
      if (c.apply_gcd_lemma && !gcd_filter(m.p, 24)) continue;
      if (c.apply_superadditivity && !superadditive_filter(m.p, 24)) continue;
      report.violations.push_back({"p24_counterexample", rec.chi, rec.chi2, m.basket, m.p});
    }
    if (rec.descendants.min_p10 <= 1 && rec.descendants.min_p24 <= 1)
      report.violations.push_back({"p24_min_pair", rec.chi, rec.chi2, rec.b12, rec.p});
  }
  report.pass = report.violations.empty();
  return report;
}

std::vector<std::pair<Basket, Rat>> recover_baskets(std::int64_t chi, std::int64_t chi2,
                                                    const std::vector<std::int64_t>& chi2to13,
                                                    int max_tail_r) {
  if (chi2to13.size() != 12) throw std::invalid_argument("recover_baskets: need chi_2..chi_13");
  Cv cv{};
  for (int m = 2; m <= 13; ++m) cv[static_cast<std::size_t>(m)] = chi2to13[static_cast<std::size_t>(m - 2)];
  if (cv[2] != chi2) throw std::invalid_argument("recover_baskets: chi2 mismatch");

  const std::int64_t eps_target = -3 * cv[2] - cv[3] + cv[4] + cv[5] + cv[6] - cv[7];
  std::map<Basket, Rat> found;
  SearchStats stats;
  for (const auto& tail : TailGen::with_eps(eps_target, max_tail_r)) {
    const ChiVector cvec = to_chi_vector(chi, cv);
    const InversionLadder L = rr_invert(cvec, tail);
    if (L.n0_12 < 0 || L.n0_13 < 0 || L.n0_14 < 0) continue;
    if (L.eps5 < 0 || L.eps7 < 0 || L.eps8 < 0) continue;
    if (L.eta_min > L.eta_max) continue;

    std::vector<Entry> b0e{{{1, 2}, L.n0_12}, {{1, 3}, L.n0_13}, {{1, 4}, L.n0_14}};
    for (std::size_t i = 0; i < tail.size(); ++i)
      b0e.push_back({{1, static_cast<std::int64_t>(5 + i)}, tail[i]});
    const Basket b0 = Basket::from_entries(std::move(b0e));

    LevelDescent d;
    d.L = &L;
    d.enforce_eps6 = true;
    d.assembled = &stats.assembled;
    d.sink = [&](const Basket& b12, const std::vector<LevelChoice>&,
                 const std::vector<std::pair<int, Basket>>&) {
      if (k3({b12, chi, chi2}) <= 0) return;
      for (const ClosureMember& m : descend(b12, chi, chi2).members)
        found.emplace(m.basket, m.k3);
    };
    d.run(b0);
  }
  return {found.begin(), found.end()};
}

}  // namespace basket3
