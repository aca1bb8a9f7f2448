#include "basket3/json_io.hpp"

#include <stdexcept>

namespace basket3 {

namespace {

std::vector<std::int64_t> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": array expected");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + ": integer expected");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

json basket_to_json(const Basket& b) {
  json pairs = json::array();
  for (const Entry& e : b.entries()) pairs.push_back({e.pair.b, e.pair.r, e.mult});
  return json{{"pairs", pairs}};
}

Basket basket_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pairs"))
    throw std::invalid_argument("basket: object with \"pairs\" expected");
  std::vector<RawPair> raw;
  for (const auto& t : j.at("pairs")) {
    const auto v = int_array(t, "basket pair");
    if (v.size() == 2)
      raw.push_back({v[0], v[1], 1});
    else if (v.size() == 3)
      raw.push_back({v[0], v[1], v[2]});
    else
      throw std::invalid_argument("basket pair: [b, r] or [b, r, mult] expected");
  }
  return canonicalize(raw);
}

json ladder_to_json(const InversionLadder& L) {
  json deltas = json::object();
  for (int m = 3; m <= 12; ++m)
    deltas[std::to_string(m)] = L.deltas[static_cast<std::size_t>(m - 3)];
  json n0 = json::object();
  n0["2"] = L.n0_12;
  n0["3"] = L.n0_13;
  n0["4"] = L.n0_14;
  for (std::size_t i = 0; i < L.n0_tail.size(); ++i) n0[std::to_string(5 + i)] = L.n0_tail[i];
  return json{{"tau", L.tau},
              {"sigma", L.sigma},
              {"deltas", deltas},
              {"n0", n0},
              {"sigma5", L.sigma5},
              {"eps", L.eps},
              {"eps5", L.eps5},
              {"eps6", L.eps6},
              {"eps7", L.eps7},
              {"eps8", L.eps8},
              {"eps9_eta0", L.eps9},
              {"eps10_eta0", L.eps10},
              {"eps12_eta0", L.eps12},
              {"eta_min", L.eta_min},
              {"eta_max", L.eta_max},
              {"R", L.Rterm},
              {"eps6_is_zero", L.eps6_is_zero},
              {"violations", L.violations},
              {"consistent", L.consistent}};
}

json candidate_to_json(const CandidateRecord& rec) {
  json choices = json::array();
  for (const LevelChoice& lc : rec.level_choices)
    choices.push_back({{"level", lc.level}, {"pair", {lc.merged.b, lc.merged.r}}, {"count", lc.count}});
  json members = json::array();
  for (const ClosureMember& m : rec.descendants.members)
    members.push_back({{"basket", basket_to_json(m.basket)},
                       {"k3", to_frac_string(m.k3)},
                       {"p", m.p},
                       {"minimal_positive", m.minimal_positive}});
  return json{{"chi", rec.chi},
              {"chi2", rec.chi2},
              {"p", rec.p},
              {"nominal_p", rec.nominal_p},
              {"n0_tail", rec.n0_tail},
              {"eta", rec.pc.eta},
              {"zeta", rec.pc.zeta},
              {"alpha", rec.pc.alpha},
              {"beta", rec.pc.beta},
              {"level_choices", choices},
              {"b12", basket_to_json(rec.b12)},
              {"k3", to_frac_string(rec.k3_b12)},
              {"d", rec.d},
              {"descendants",
               {{"positive_count", rec.descendants.positive_count},
                {"min_p10", rec.descendants.min_p10},
                {"min_p24", rec.descendants.min_p24},
                {"min_k3", to_frac_string(rec.descendants.min_k3)},
                {"members", members}}}};
}

json report_to_json(const SearchReport& report) {
  json candidates = json::array();
  for (const CandidateRecord& rec : report.candidates) candidates.push_back(candidate_to_json(rec));
  json violations = json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"kind", v.kind},
                          {"chi", v.chi},
                          {"chi2", v.chi2},
                          {"basket", basket_to_json(v.basket)},
                          {"p", v.p}});
  // wall time deliberately kept out: reports must be byte-identical across runs
  return json{{"check", report.check},
              {"constraints", constraints_to_json(report.constraints)},
              {"candidates", candidates},
              {"violations", violations},
              {"stats",
               {{"branches", report.stats.branches},
                {"assembled", report.stats.assembled},
                {"candidate_count", report.candidates.size()}}},
              {"min_k3", report.min_k3 ? json(to_frac_string(*report.min_k3)) : json()},
              {"order_key", report.order_key},
              {"pass", report.pass}};
}

json constraints_to_json(const Constraints& c) {
  return json{{"chi_min", c.chi_min},
              {"chi_max", c.chi_max},
              {"pm_cap", c.pm_cap},
              {"require_p2_zero", c.require_p2_zero},
              {"apply_gcd_lemma", c.apply_gcd_lemma},
              {"apply_superadditivity", c.apply_superadditivity},
              {"sigma_cap", c.sigma_cap},
              {"n0_zero_from", c.n0_zero_from},
              {"enforce_eps6", c.enforce_eps6}};
}

Constraints constraints_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("constraints: object expected");
  Constraints c;
  const auto geti = [&j](const char* key, int dflt) {
    return j.contains(key) ? j.at(key).get<int>() : dflt;
  };
  const auto getb = [&j](const char* key, bool dflt) {
    return j.contains(key) ? j.at(key).get<bool>() : dflt;
  };
  c.chi_min = geti("chi_min", c.chi_min);
  c.chi_max = geti("chi_max", c.chi_max);
  c.pm_cap = geti("pm_cap", c.pm_cap);
  c.require_p2_zero = getb("require_p2_zero", c.require_p2_zero);
  c.apply_gcd_lemma = getb("apply_gcd_lemma", c.apply_gcd_lemma);
  c.apply_superadditivity = getb("apply_superadditivity", c.apply_superadditivity);
  c.sigma_cap = geti("sigma_cap", c.sigma_cap);
  c.n0_zero_from = geti("n0_zero_from", c.n0_zero_from);
  c.enforce_eps6 = getb("enforce_eps6", c.enforce_eps6);
  c.workers = geti("workers", c.workers);
  return c;
}

ChiVector chi_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("chi") || !j.contains("values"))
    throw std::invalid_argument("chi-vector: {\"chi\", \"values\"} expected");
  ChiVector cv;
  cv.chi = j.at("chi").get<std::int64_t>();
  cv.values = int_array(j.at("values"), "chi-vector values");
  return cv;
}

std::vector<std::int64_t> tail_from_json(const json& j) { return int_array(j, "tail"); }

}  // namespace basket3
