// Command-line front end. Exit codes: 0 success / verification passed,
// 1 verification counterexample, 2 usage error, 3 input format error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "basket3/canonical.hpp"
#include "basket3/enumerate.hpp"
#include "basket3/farey.hpp"
#include "basket3/json_io.hpp"
#include "basket3/wps.hpp"

namespace {

using basket3::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON in ") + path + ": " + e.what());
  }
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text << "\n";
}

std::vector<std::int64_t> parse_csv_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("malformed integer list: " + s);
    out.push_back(v);
  }
  return out;
}

struct Options {
  std::string basket_file, chi_vector_file, tail_file, constraints_file, out, format = "json";
  std::int64_t chi = 0, chi2 = 0;
  int upto = 24, level = 0, rmax = 10;
  basket3::Constraints cons;
  std::string weights;
  std::int64_t degree = 0;
  std::string verify_what;
};

int cmd_eval(const Options& o) {
  const basket3::Basket b = basket3::basket_from_json(load_json(o.basket_file));
  const basket3::FormalBasket fb{b, o.chi, o.chi2};
  const basket3::ChiVector cv = basket3::chi_seq(fb, o.upto);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "m,chi_m\n";
    for (int m = 2; m <= cv.mmax(); ++m) os << m << ',' << cv.at(m) << '\n';
    emit(o.out, os.str());
    return 0;
  }
  json j{{"sigma", basket3::sigma(b)},
         {"sigma_prime", basket3::to_frac_string(basket3::sigma_prime(b))},
         {"k3", basket3::to_frac_string(basket3::k3(fb))},
         {"chi", cv.values}};
  emit(o.out, j.dump(2));
  return 0;
}

int cmd_canon(const Options& o) {
  const basket3::Basket b = basket3::basket_from_json(load_json(o.basket_file));
  const basket3::CanonicalSequence seq = basket3::sequence(b, o.upto);
  std::ostringstream os;
  for (const auto& step : seq.steps) {
    json line{{"level", step.level}, {"basket", basket3::basket_to_json(step.basket)}};
    if (step.level >= 5) line["epsilon"] = step.eps;
    os << line.dump() << '\n';
  }
  os << json{{"stabilization_level", seq.stabilization_level}}.dump();
  emit(o.out, os.str());
  return 0;
}

int cmd_farey(const Options& o) {
  const basket3::FareyLevel lv = basket3::farey_level(o.level, o.rmax);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "numerator,denominator\n";
    for (const auto& f : lv.fractions) os << f.b << ',' << f.r << '\n';
    emit(o.out, os.str());
    return 0;
  }
  json fr = json::array();
  for (const auto& f : lv.fractions)
    fr.push_back(std::to_string(f.b) + "/" + std::to_string(f.r));
  emit(o.out, json{{"level", lv.level}, {"rmax", lv.rmax}, {"fractions", fr}}.dump(2));
  return 0;
}

int cmd_invert(const Options& o) {
  const basket3::ChiVector cv = basket3::chi_vector_from_json(load_json(o.chi_vector_file));
  std::vector<std::int64_t> tail;
  if (!o.tail_file.empty()) tail = basket3::tail_from_json(load_json(o.tail_file));
  emit(o.out, basket3::ladder_to_json(basket3::rr_invert(cv, tail)).dump(2));
  return 0;
}

int cmd_enumerate(const Options& o) {
  const basket3::SearchReport rep = basket3::run_enumeration(o.cons);
  emit(o.out, basket3::report_to_json(rep).dump(2));
  std::cerr << "enumerate: " << rep.candidates.size() << " candidates, " << rep.stats.branches
            << " branches, " << rep.stats.wall_ms << " ms\n";
  return 0;
}

int cmd_verify(const Options& o) {
  basket3::Constraints c = o.cons;
  if (!o.constraints_file.empty())
    c = basket3::constraints_from_json(load_json(o.constraints_file));
  basket3::SearchReport rep;
  if (o.verify_what == "p12")
    rep = basket3::verify_p12(c);
  else
    rep = basket3::verify_p24(c);
  emit(o.out, basket3::report_to_json(rep).dump(2));
  std::cerr << "verify " << o.verify_what << ": " << (rep.pass ? "pass" : "FAIL") << " ("
            << rep.violations.size() << " violations, " << rep.candidates.size()
            << " candidates, " << rep.stats.wall_ms << " ms)\n";
  return rep.pass ? 0 : 1;
}

int cmd_wps(const Options& o) {
  const auto weights = parse_csv_ints(o.weights);
  const basket3::WeightedHypersurface h = basket3::make_wps(weights, o.degree);
  std::vector<std::int64_t> pl;
  for (int m = 1; m <= o.upto; ++m) pl.push_back(basket3::poincare_coeff(h, m));
  if (o.format == "csv") {
    std::ostringstream os;
    os << "m,P_m\n";
    for (int m = 1; m <= o.upto; ++m) os << m << ',' << pl[static_cast<std::size_t>(m - 1)] << '\n';
    emit(o.out, os.str());
    return 0;
  }
  json j{{"plurigenera", pl}, {"volume", basket3::to_frac_string(basket3::wps_volume(h))}};
  emit(o.out, j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact basket calculus for threefold plurigenera"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "chi-vector, sigma, K^3 of a formal basket");
  eval->add_option("--basket", o.basket_file, "basket JSON file")->required();
  eval->add_option("--chi", o.chi, "chi(O)")->required();
  eval->add_option("--chi2", o.chi2, "chi_2");
  eval->add_option("--upto", o.upto, "largest m");
  eval->add_option("--out", o.out);
  eval->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* canon = app.add_subcommand("canon", "canonical sequence of prime unpackings");
  canon->add_option("--basket", o.basket_file)->required();
  canon->add_option("--upto", o.upto)->required();
  canon->add_option("--out", o.out);

  auto* farey = app.add_subcommand("farey", "slope level set S^(n)");
  farey->add_option("--level", o.level)->required();
  farey->add_option("--rmax", o.rmax)->required();
  farey->add_option("--out", o.out);
  farey->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* invert = app.add_subcommand("invert", "inversion ladder from a chi-vector");
  invert->add_option("--chi-vector", o.chi_vector_file)->required();
  invert->add_option("--tail", o.tail_file, "initial-basket tail JSON array");
  invert->add_option("--out", o.out);

  const auto add_constraint_flags = [&o](CLI::App* cmd) {
    cmd->add_option("--chi-min", o.cons.chi_min)->check(CLI::Range(2, 8));
    cmd->add_option("--chi-max", o.cons.chi_max)->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--pm-cap", o.cons.pm_cap)->check(CLI::NonNegativeNumber);
    cmd->add_option("--sigma-cap", o.cons.sigma_cap)->check(CLI::NonNegativeNumber);
    cmd->add_option("--workers", o.cons.workers)->check(CLI::NonNegativeNumber);
    cmd->add_flag_callback("--no-gcd-lemma", [&o] { o.cons.apply_gcd_lemma = false; });
    cmd->add_flag_callback("--no-superadditivity",
                           [&o] { o.cons.apply_superadditivity = false; });
    cmd->add_flag_callback("--ablate-eps6", [&o] { o.cons.enforce_eps6 = false; });
  };

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive formal-basket search");
  add_constraint_flags(enumerate);
  enumerate->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "replay a theorem (exit 1 on counterexample)");
  verify->add_option("check", o.verify_what, "p12 or p24")
      ->required()
      ->check(CLI::IsMember({"p12", "p24"}));
  add_constraint_flags(verify);
  verify->add_option("--constraints", o.constraints_file, "constraints JSON file");
  verify->add_option("--out", o.out);

  auto* wps = app.add_subcommand("wps", "weighted hypersurface plurigenera and volume");
  wps->add_option("--weights", o.weights, "five weights, comma separated")->required();
  wps->add_option("--degree", o.degree)->required();
  wps->add_option("--upto", o.upto);
  wps->add_option("--out", o.out);
  wps->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError&) {
    std::cerr << app.help() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return cmd_eval(o);
    if (app.got_subcommand(canon)) return cmd_canon(o);
    if (app.got_subcommand(farey)) return cmd_farey(o);
    if (app.got_subcommand(invert)) return cmd_invert(o);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
    if (app.got_subcommand(wps)) return cmd_wps(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
