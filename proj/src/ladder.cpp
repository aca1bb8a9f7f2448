#include "basket3/ladder.hpp"

#include <algorithm>
#include <stdexcept>

namespace basket3 {

namespace {

struct Vars {
  std::int64_t chi;
  std::array<std::int64_t, 14> c{};       // c[m] = chi_m, m = 2..13
  std::vector<std::int64_t> t;            // t[r] = n0_{1,r}, r >= 5 (index by r)
  std::int64_t s5 = 0;                    // sigma5

  std::int64_t tl(std::int64_t r) const {
    return r < static_cast<std::int64_t>(t.size()) ? t[static_cast<std::size_t>(r)] : 0;
  }
};

Vars load(const ChiVector& cv, const std::vector<std::int64_t>& tail) {
  if (cv.mmax() < 13) throw std::invalid_argument("ladder: chi-vector must reach chi_13");
  Vars v;
  v.chi = cv.chi;
  for (int m = 2; m <= 13; ++m) v.c[static_cast<std::size_t>(m)] = cv.at(m);
  v.t.assign(5 + tail.size(), 0);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] < 0) throw std::invalid_argument("ladder: negative tail entry");
    v.t[5 + i] = tail[i];
    v.s5 += tail[i];
  }
  return v;
}

std::int64_t delta_target(const Vars& v, std::int64_t m) {
  // Delta^m = chi_{m+1} - chi_m + 2 chi + m^2/2 tau - m/2 sigma, always integral
  const std::int64_t tau = 4 * v.chi + 3 * v.c[2] - v.c[3];
  const std::int64_t sig = 10 * v.chi + 5 * v.c[2] - v.c[3];
  const std::int64_t half = m * (m * tau - sig);
  if (half % 2 != 0) throw std::logic_error("delta_target: parity violated");
  return v.c[static_cast<std::size_t>(m + 1)] - v.c[static_cast<std::size_t>(m)] + 2 * v.chi +
         half / 2;
}

std::int64_t eps_of_tail(const Vars& v) {
  std::int64_t e = v.tl(5);
  for (std::int64_t r = 6; r < static_cast<std::int64_t>(v.t.size()); ++r) e += 2 * v.tl(r);
  return e;
}

std::int64_t r_term(const Vars& v) {
  // R = 2 n5 + 5 n6 + 6 n7 + 8 n8 + 10 n9 + 12 n10 + 13 n11 + 14 sum_{r>=12}
  static constexpr std::int64_t w[] = {2, 5, 6, 8, 10, 12, 13};
  std::int64_t R = 0;
  for (std::int64_t r = 5; r < static_cast<std::int64_t>(v.t.size()); ++r)
    R += (r <= 11 ? w[r - 5] : 14) * v.tl(r);
  return R;
}

struct Row {
  Pair pair;
  std::int64_t coeff;
};

bool build_basket(const std::vector<Row>& rows, int level, AssembledLadder& out, Basket& dst) {
  std::vector<Entry> entries;
  for (const Row& row : rows) {
    if (row.coeff < 0) {
      out.ok = false;
      out.fail_level = level;
      out.fail_pair = row.pair;
      out.fail_coeff = row.coeff;
      return false;
    }
    if (row.coeff > 0) entries.push_back({row.pair, row.coeff});
  }
  dst = Basket::from_entries(std::move(entries));
  return true;
}

}  // namespace

InversionLadder rr_invert(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail) {
  const Vars v = load(cv, n0_tail);
  const auto& c = v.c;
  InversionLadder L;
  L.tau = 4 * v.chi + 3 * c[2] - c[3];
  L.sigma = 10 * v.chi + 5 * c[2] - c[3];
  for (int m = 3; m <= 12; ++m) L.deltas[static_cast<std::size_t>(m - 3)] = delta_target(v, m);

  L.n0_tail = n0_tail;
  L.sigma5 = v.s5;
  L.n0_12 = 5 * v.chi + 6 * c[2] - 4 * c[3] + c[4];
  L.n0_13 = 4 * v.chi + 2 * c[2] + 2 * c[3] - 3 * c[4] + c[5];
  L.n0_14 = v.chi - 3 * c[2] + c[3] + 2 * c[4] - c[5] - v.s5;
  L.eps = eps_of_tail(v);

  L.eps5 = 2 * v.chi - c[3] + 2 * c[5] - c[6] - v.s5;
  L.eps6 = -3 * c[2] - c[3] + c[4] + c[5] + c[6] - c[7] - L.eps;
  L.eps7 = v.chi - c[2] - c[3] + c[6] + c[7] - c[8] - 2 * v.s5 + 2 * v.tl(5) + v.tl(6);
  L.eps8 = -2 * c[2] - c[3] - c[4] + c[5] + c[6] + c[8] - c[9] - 3 * v.s5 + 3 * v.tl(5) +
           2 * v.tl(6) + v.tl(7);
  L.eps9 = -2 * c[2] - 2 * c[3] + c[4] + c[5] - c[7] + c[8] + c[9] - c[10] - 3 * v.s5 +
           2 * v.tl(5) + 2 * v.tl(6) + 2 * v.tl(7) + v.tl(8);
  L.eps10 = -5 * c[2] - c[3] + 2 * c[6] + c[10] - c[11] - 6 * v.s5 + 5 * v.tl(5) + 4 * v.tl(6) +
            3 * v.tl(7) + 2 * v.tl(8) + v.tl(9);
  L.eps12 = -v.chi - 5 * c[2] - 3 * c[3] + 2 * c[5] + c[6] - c[7] + c[8] + c[12] - c[13] -
            8 * v.s5 + 7 * v.tl(5) + 5 * v.tl(6) + 5 * v.tl(7) + 4 * v.tl(8) + 3 * v.tl(9) +
            2 * v.tl(10) + v.tl(11);
  L.Rterm = r_term(v);
  L.eps6_is_zero = (L.eps6 == 0);

  // eta enters eps9 with +1, eps10 with -1, eps12 with +1
  L.eta_min = std::max<std::int64_t>({0, -L.eps9, -L.eps12});
  L.eta_max = std::min<std::int64_t>(L.eps7, L.eps10);

  auto require = [&L](bool ok, const std::string& what) {
    if (!ok) L.violations.push_back(what);
  };
  require(L.n0_12 >= 0, "n0_{1,2} < 0");
  require(L.n0_13 >= 0, "n0_{1,3} < 0");
  require(L.n0_14 >= 0, "n0_{1,4} < 0");
  require(L.eps5 >= 0, "eps5 < 0");
  require(L.eps6 == 0, "eps6 != 0");
  require(L.eps7 >= 0, "eps7 < 0");
  require(L.eps8 >= 0, "eps8 < 0");
  require(L.eta_min <= L.eta_max, "no eta satisfies eps9, eps10, eps12 >= 0");
  require(L.eps10 + L.eps12 >= 0, "inequality (eps10 + eps12) violated");
  L.consistent = L.violations.empty();
  return L;
}

bool deep_ladder_applies(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail) {
  if (cv.at(2) != 0) return false;
  for (std::size_t i = 1; i < n0_tail.size(); ++i)  // entries r >= 6
    if (n0_tail[i] != 0) return false;
  return true;
}

FinitenessInequality finiteness_inequality(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail) {
  const Vars v = load(cv, n0_tail);
  const auto& c = v.c;
  FinitenessInequality out;
  out.lhs = 2 * c[5] + 3 * c[6] + c[8] + c[10] + c[12];
  out.R = r_term(v);
  out.rhs = v.chi + 10 * c[2] + 4 * c[3] + c[7] + c[11] + c[13] + out.R;
  out.holds = out.lhs >= out.rhs;
  return out;
}

AssembledLadder assemble_ladder(const ChiVector& cv, const std::vector<std::int64_t>& n0_tail,
                                const PackingChoice& pc) {
  const Vars v = load(cv, n0_tail);
  const auto& c = v.c;
  const std::int64_t chi = v.chi, s5 = v.s5, t5 = v.tl(5), t6 = v.tl(6);
  const std::int64_t eta = pc.eta, zeta = pc.zeta, alpha = pc.alpha, beta = pc.beta;
  if (eta < 0 || zeta < 0 || alpha < 0 || beta < 0)
    throw std::invalid_argument("assemble_ladder: negative packing choice");

  AssembledLadder out;
  out.ok = true;
  out.eps5 = 2 * chi - c[3] + 2 * c[5] - c[6] - s5;

  // B^(5), general form
  std::vector<Row> b5{
      {{1, 2}, 3 * chi + 6 * c[2] - 3 * c[3] + c[4] - 2 * c[5] + c[6] + s5},
      {{2, 5}, out.eps5},
      {{1, 3}, 2 * chi + 2 * c[2] + 3 * c[3] - 3 * c[4] - c[5] + c[6] + s5},
      {{1, 4}, chi - 3 * c[2] + c[3] + 2 * c[4] - c[5] - s5},
  };
  for (std::int64_t r = 5; r < static_cast<std::int64_t>(v.t.size()); ++r)
    b5.push_back({{1, r}, v.tl(r)});
  if (!build_basket(b5, 5, out, out.b5)) return out;

  // B^(7), general form
  out.eps7 = chi - c[2] - c[3] + c[6] + c[7] - c[8] - 2 * s5 + 2 * t5 + t6;
  std::vector<Row> b7{
      {{1, 2},
       2 * chi + 7 * c[2] - 2 * c[3] + c[4] - 2 * c[5] - c[7] + c[8] + 3 * s5 - 2 * t5 - t6 + eta},
      {{3, 7}, out.eps7 - eta},
      {{2, 5},
       chi + c[2] + 2 * c[5] - 2 * c[6] - c[7] + c[8] + s5 - 2 * t5 - t6 + eta},
      {{1, 3}, 2 * chi + 2 * c[2] + 3 * c[3] - 3 * c[4] - c[5] + c[6] + s5 - eta},
      {{2, 7}, eta},
      {{1, 4}, chi - 3 * c[2] + c[3] + 2 * c[4] - c[5] - s5 - eta},
  };
  for (std::int64_t r = 5; r < static_cast<std::int64_t>(v.t.size()); ++r)
    b7.push_back({{1, r}, v.tl(r)});
  if (!build_basket(b7, 7, out, out.b7)) return out;

  out.deep = deep_ladder_applies(cv, n0_tail);
  if (!out.deep) return out;

  // From here on chi2 = 0 and the tail is only n0_{1,5}; coefficient tables
  // below are the specialized closed forms.
  const std::int64_t n15 = t5;

  out.eps8 = -c[3] - c[4] + c[5] + c[6] + c[8] - c[9];
  std::vector<Row> b8{
      {{1, 2}, 2 * chi - 2 * c[3] + c[4] - 2 * c[5] - c[7] + c[8] + n15 + eta},
      {{3, 7}, chi - c[3] + c[6] + c[7] - c[8] - eta},
      {{2, 5}, chi + c[3] + c[4] + c[5] - 3 * c[6] - c[7] + c[9] - n15 + eta},
      {{3, 8}, out.eps8},
      {{1, 3}, 2 * chi + 4 * c[3] - 2 * c[4] - 2 * c[5] - c[8] + c[9] + n15 - eta},
      {{2, 7}, eta},
      {{1, 4}, chi + c[3] + 2 * c[4] - c[5] - n15 - eta},
      {{1, 5}, n15},
  };
  if (!build_basket(b8, 8, out, out.b8)) return out;

  out.eps9 = -2 * c[3] + c[4] + c[5] - c[7] + c[8] + c[9] - c[10] - n15 + eta;
  std::vector<Row> b9{
      {{1, 2}, 2 * chi - 2 * c[3] + c[4] - 2 * c[5] - c[7] + c[8] + n15 + eta - zeta},
      {{4, 9}, zeta},
      {{3, 7}, chi - c[3] + c[6] + c[7] - c[8] - eta - zeta},
      {{2, 5}, chi + c[3] + c[4] + c[5] - 3 * c[6] - c[7] + c[9] - n15 + eta},
      {{3, 8}, -c[3] - c[4] + c[5] + c[6] + c[8] - c[9]},
      {{1, 3}, 2 * chi + 4 * c[3] - 2 * c[4] - 2 * c[5] - c[8] + c[9] + n15 - eta},
      {{2, 7}, eta},
      {{1, 4},
       chi + 3 * c[3] + c[4] - 2 * c[5] + c[7] - c[8] - c[9] + c[10] - 2 * eta + zeta},
      {{2, 9}, -2 * c[3] + c[4] + c[5] - c[7] + c[8] + c[9] - c[10] - n15 + eta - zeta},
      {{1, 5},
       2 * c[3] - c[4] - c[5] + c[7] - c[8] - c[9] + c[10] + 2 * n15 - eta + zeta},
  };
  if (!build_basket(b9, 9, out, out.b9)) return out;

  out.eps10 = -c[3] + 2 * c[6] + c[10] - c[11] - n15 - eta;
  std::vector<Row> b10{
      {{1, 2}, 2 * chi - 2 * c[3] + c[4] - 2 * c[5] - c[7] + c[8] + n15 + eta - zeta},
      {{4, 9}, zeta},
      {{3, 7}, chi - c[3] + c[6] + c[7] - c[8] - eta - zeta},
      {{2, 5}, chi + c[3] + c[4] + c[5] - 3 * c[6] - c[7] + c[9] - n15 + eta},
      {{3, 8}, -c[3] - c[4] + c[5] + c[6] + c[8] - c[9]},
      {{1, 3},
       2 * chi + 5 * c[3] - 2 * c[4] - 2 * c[5] - 2 * c[6] - c[8] + c[9] - c[10] + c[11] +
           2 * n15},
      {{3, 10}, -c[3] + 2 * c[6] + c[10] - c[11] - n15 - eta},
      {{2, 7}, c[3] - 2 * c[6] - c[10] + c[11] + n15 + 2 * eta},
      {{1, 4},
       chi + 3 * c[3] + c[4] - 2 * c[5] + c[7] - c[8] - c[9] + c[10] - 2 * eta + zeta},
      {{2, 9}, -2 * c[3] + c[4] + c[5] - c[7] + c[8] + c[9] - c[10] - n15 + eta - zeta},
      {{1, 5},
       2 * c[3] - c[4] - c[5] + c[7] - c[8] - c[9] + c[10] + 2 * n15 - eta + zeta},
  };
  if (!build_basket(b10, 10, out, out.b10)) return out;

  out.eps11 = chi - c[3] + c[4] - c[7] + c[9] + c[11] - c[12] - n15 - zeta;
  std::vector<Row> b11{
      {{1, 2}, 2 * chi - 2 * c[3] + c[4] - 2 * c[5] - c[7] + c[8] + n15 + eta - zeta - alpha},
      {{5, 11}, alpha},
      {{4, 9}, zeta - alpha},
      {{3, 7}, chi - c[3] + c[6] + c[7] - c[8] - eta - zeta},
      {{2, 5}, chi + c[3] + c[4] + c[5] - 3 * c[6] - c[7] + c[9] - n15 + eta},
      {{3, 8}, -c[3] - c[4] + c[5] + c[6] + c[8] - c[9] - beta},
      {{4, 11}, beta},
      {{1, 3},
       2 * chi + 5 * c[3] - 2 * c[4] - 2 * c[5] - 2 * c[6] - c[8] + c[9] - c[10] + c[11] +
           2 * n15 - beta},
      {{3, 10}, -c[3] + 2 * c[6] + c[10] - c[11] - n15 - eta},
      {{2, 7},
       -chi + 2 * c[3] - c[4] - 2 * c[6] + c[7] - c[9] - c[10] + c[12] + 2 * n15 + 2 * eta +
           zeta + alpha + beta},
      {{3, 11},
       chi - c[3] + c[4] - c[7] + c[9] + c[11] - c[12] - n15 - zeta - alpha - beta},
      {{1, 4},
       4 * c[3] - 2 * c[5] + 2 * c[7] - c[8] - 2 * c[9] + c[10] - c[11] + c[12] + n15 -
           2 * eta + 2 * zeta + alpha + beta},
      {{2, 9}, -2 * c[3] + c[4] + c[5] - c[7] + c[8] + c[9] - c[10] - n15 + eta - zeta},
      {{1, 5},
       2 * c[3] - c[4] - c[5] + c[7] - c[8] - c[9] + c[10] + 2 * n15 - eta + zeta},
  };
  if (!build_basket(b11, 11, out, out.b11)) return out;

  out.eps12 = -chi - 3 * c[3] + 2 * c[5] + c[6] - c[7] + c[8] + c[12] - c[13] - n15 + eta;
  std::vector<Row> b12{
      {{1, 2}, 2 * chi - 2 * c[3] + c[4] - 2 * c[5] - c[7] + c[8] + n15 + eta - zeta - alpha},
      {{5, 11}, alpha},
      {{4, 9}, zeta - alpha},
      {{3, 7},
       2 * chi + 2 * c[3] - 2 * c[5] + 2 * c[7] - 2 * c[8] - c[12] + c[13] - 2 * eta - zeta +
           n15},
      {{5, 12}, -chi - 3 * c[3] + 2 * c[5] + c[6] - c[7] + c[8] + c[12] - c[13] + eta - n15},
      {{2, 5}, 2 * chi + 4 * c[3] + c[4] - c[5] - 4 * c[6] - c[8] + c[9] - c[12] + c[13]},
      {{3, 8}, -c[3] - c[4] + c[5] + c[6] + c[8] - c[9] - beta},
      {{4, 11}, beta},
      {{1, 3},
       2 * chi + 5 * c[3] - 2 * c[4] - 2 * c[5] - 2 * c[6] - c[8] + c[9] - c[10] + c[11] +
           2 * n15 - beta},
      {{3, 10}, -c[3] + 2 * c[6] + c[10] - c[11] - n15 - eta},
      {{2, 7},
       -chi + 2 * c[3] - c[4] - 2 * c[6] + c[7] - c[9] - c[10] + c[12] + 2 * n15 + 2 * eta +
           zeta + alpha + beta},
      {{3, 11},
       chi - c[3] + c[4] - c[7] + c[9] + c[11] - c[12] - n15 - zeta - alpha - beta},
      {{1, 4},
       4 * c[3] - 2 * c[5] + 2 * c[7] - c[8] - 2 * c[9] + c[10] - c[11] + c[12] + n15 -
           2 * eta + 2 * zeta + alpha + beta},
      {{2, 9}, -2 * c[3] + c[4] + c[5] - c[7] + c[8] + c[9] - c[10] - n15 + eta - zeta},
      {{1, 5},
       2 * c[3] - c[4] - c[5] + c[7] - c[8] - c[9] + c[10] + 2 * n15 - eta + zeta},
  };
  if (!build_basket(b12, 12, out, out.b12)) return out;
  return out;
}

}  // namespace basket3
