#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "evenspin/errors.hpp"
#include "evenspin/mzeron.hpp"
#include "evenspin/segre.hpp"
#include "evenspin/spincone.hpp"
#include "evenspin/theta.hpp"
#include "evenspin/verify.hpp"

namespace evenspin::cli {

using nlohmann::ordered_json;

nlohmann::ordered_json Report::to_json() const {
  ordered_json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["anchor"] = anchor;
  j["status"] = pass ? "pass" : "fail";
  for (const auto& [key, value] : payload.items()) j[key] = value;
  return j;
}

std::string Report::to_tsv() const {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
    os << '\n';
  };
  line(tsv_header);
  for (const auto& row : tsv_rows) line(row);
  return os.str();
}

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (!text.empty() && text.back() == ',') throw InvalidInput("trailing comma in '" + text + "'");
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Report table_report() {
  Report r{"table", "intersection numbers of A0,B0,A1,B1 with Gamma_1..Gamma_5"};
  const auto table = spincone::intersection_table();
  const spincone::IntersectionTable expected{
      {{3, 1, 0, -2, 0}, {0, 2, -1, 1, -1}, {0, -1, 2, 1, 2}, {-1, 0, 0, 1, 0}}};
  r.pass = table == expected;
  const char* names[] = {"A0", "B0", "A1", "B1"};
  ordered_json rows = ordered_json::object();
  r.tsv_header = {"class", "Gamma1", "Gamma2", "Gamma3", "Gamma4", "Gamma5"};
  for (std::size_t i = 0; i < 4; ++i) {
    rows[names[i]] = table[i];
    std::vector<std::string> row{names[i]};
    for (int x : table[i]) row.push_back(std::to_string(x));
    r.tsv_rows.push_back(std::move(row));
  }
  ordered_json curves = ordered_json::array();
  for (int i = 1; i <= 5; ++i) curves.push_back(spincone::gamma(i).str());
  r.payload["curves"] = curves;
  r.payload["table"] = rows;
  return r;
}

Report nef_report(const std::string& class_text, bool basis3) {
  Report r{"nef", "nef and ample cone of the spin moduli space"};
  const auto values = parse_rational_list(class_text);
  spincone::SpinClass s;
  spincone::NefCheck nef;
  spincone::NefCheck ample;
  if (basis3) {
    if (values.size() != 3) throw InvalidInput("--basis3 expects three coefficients a,b,c");
    const spincone::SpinClass3 t{values[0], values[1], values[2]};
    s = spincone::from_basis3(t);
    nef = spincone::is_nef(t);
    ample = spincone::is_ample(t);
    r.payload["basis3"] = t.str();
  } else {
    if (values.size() != 4) throw InvalidInput("--class expects four coefficients a,b,c,d");
    s = {values[0], values[1], values[2], values[3]};
    nef = spincone::is_nef(s);
    ample = spincone::is_ample(s);
  }
  const auto lifted = spincone::lift(s);
  const auto scan_nef = mzeron::is_fnef(lifted);
  const auto scan_ample = mzeron::is_fample(lifted);
  r.pass = scan_nef.holds == nef.holds && scan_ample.holds == ample.holds;

  r.payload["class"] = s.str();
  r.payload["nef"] = nef.holds;
  r.payload["ample"] = ample.holds;
  r.payload["certificate"] = scan_nef.certificate ? ordered_json(scan_nef.certificate->str()) : ordered_json(nullptr);
  r.payload["ample_certificate"] =
      scan_ample.certificate ? ordered_json(scan_ample.certificate->str()) : ordered_json(nullptr);
  r.payload["violated"] = nef.holds ? ordered_json(nullptr) : ordered_json(nef.violated);
  r.payload["fcurve_scan_agrees"] = r.pass;
  r.tsv_header = {"class", "nef", "ample", "certificate", "violated"};
  r.tsv_rows.push_back({s.str(), yes_no(nef.holds), yes_no(ample.holds),
                        scan_nef.certificate ? scan_nef.certificate->str() : "",
                        nef.holds ? "" : nef.violated});
  return r;
}

Report relation_report() {
  Report r{"relation", "linear relation among A0, B0, A1, B1"};
  const auto rel = spincone::picard_relation();
  r.pass = rel == spincone::SpinClass{3, -2, -1, 9};
  r.payload["relation"] = {rel.a0.str(), rel.b0.str(), rel.a1.str(), rel.b1.str()};
  r.payload["class"] = rel.str();
  r.payload["fcurves_checked"] = mzeron::enumerate_fcurves(6).size();
  r.tsv_header = {"A0", "B0", "A1", "B1"};
  r.tsv_rows.push_back({rel.a0.str(), rel.b0.str(), rel.a1.str(), rel.b1.str()});
  return r;
}

Report lct_report(const std::string& model) {
  Report r{"lct", ""};
  Rational threshold;
  if (model == "spin") {
    r.anchor = "nef threshold of the log canonical divisor on the spin moduli space";
    threshold = spincone::nef_threshold_spin();
    r.pass = threshold == Rational(57, 25);
    ordered_json constraints = ordered_json::array();
    for (const auto& c : spincone::spin_threshold_constraints()) {
      constraints.push_back({{"inequality", c.inequality},
                             {"slope", c.slope.str()},
                             {"offset", c.offset.str()},
                             {"lower_bound", c.lower_bound ? ordered_json(c.lower_bound->str())
                                                           : ordered_json(nullptr)}});
    }
    r.payload["model"] = model;
    r.payload["threshold"] = threshold.str();
    r.payload["constraints"] = constraints;
    ordered_json constants = ordered_json::array();
    for (const auto* k : {&spincone::canonical_m2bar(), &spincone::bielliptic_m2bar()}) {
      constants.push_back({{"name", k->name},
                           {"delta0", k->value.delta0.str()},
                           {"delta1", k->value.delta1.str()},
                           {"source", k->source}});
    }
    r.payload["constants"] = constants;
  } else if (model == "inv") {
    r.anchor = "nef threshold of the log canonical divisor on the invariant model";
    threshold = spincone::inv_threshold();
    r.pass = threshold == Rational(49, 25);
    r.payload["model"] = model;
    r.payload["threshold"] = threshold.str();
  } else {
    throw InvalidInput("--model must be 'spin' or 'inv'");
  }
  r.tsv_header = {"model", "threshold"};
  r.tsv_rows.push_back({model, threshold.str()});
  return r;
}

Report classify_report(const std::string& eps_text) {
  Report r{"classify", "log canonical model as a function of epsilon"};
  const Rational eps = Rational::parse(eps_text);
  const auto regime = spincone::classify(eps);
  r.payload["epsilon"] = eps.str();
  r.payload["regime"] = spincone::regime_name(regime);
  r.payload["spin_class"] = spincone::log_canonical_divisor(eps).str();
  r.payload["inv_coefficient"] = spincone::inv_log_canonical(eps).coeff_a0inv().str();
  r.tsv_header = {"epsilon", "regime"};
  r.tsv_rows.push_back({eps.str(), std::string(spincone::regime_name(regime))});
  return r;
}

Report fiber_report() {
  Report r{"fiber-degrees", "degrees of the forgetful map over the boundary"};
  const auto deg = spincone::fiber_degrees();
  r.pass = deg.over_delta0 == std::pair{4, 6} && deg.over_delta1 == std::pair{9, 1};
  r.payload["over_delta0"] = {{"A0", deg.over_delta0.first}, {"B0", deg.over_delta0.second}};
  r.payload["over_delta1"] = {{"A1", deg.over_delta1.first}, {"B1", deg.over_delta1.second}};
  r.tsv_header = {"divisor", "degree"};
  r.tsv_rows = {{"A0", std::to_string(deg.over_delta0.first)},
                {"B0", std::to_string(deg.over_delta0.second)},
                {"A1", std::to_string(deg.over_delta1.first)},
                {"B1", std::to_string(deg.over_delta1.second)}};
  return r;
}

Report fcurves_report(int n, bool list) {
  Report r{"fcurves", "F-curves of the moduli space of n-pointed rational curves"};
  const auto& curves = mzeron::enumerate_fcurves(n);
  r.payload["n"] = n;
  r.payload["count"] = curves.size();
  r.payload["boundary_count"] = mzeron::enumerate_boundaries(n).size();
  if (list) {
    ordered_json items = ordered_json::array();
    r.tsv_header = {"index", "fcurve"};
    for (std::size_t i = 0; i < curves.size(); ++i) {
      items.push_back(curves[i].str());
      r.tsv_rows.push_back({std::to_string(i + 1), curves[i].str()});
    }
    r.payload["fcurves"] = items;
  } else {
    r.tsv_header = {"n", "count"};
    r.tsv_rows.push_back({std::to_string(n), std::to_string(curves.size())});
  }
  return r;
}

Report segre_report(const std::string& what, bool orbits) {
  Report r{"segre", ""};
  if (what == "planes") {
    r.anchor = "planes in the Segre cubic";
    const auto planes = segre::enumerate_planes();
    r.payload["count"] = planes.size();
    if (orbits) {
      ordered_json out = ordered_json::array();
      r.tsv_header = {"orbit", "plane"};
      const auto po = segre::plane_orbits();
      for (std::size_t k = 0; k < po.size(); ++k) {
        ordered_json members = ordered_json::array();
        for (const auto& p : po[k]) {
          members.push_back(p.str());
          r.tsv_rows.push_back({std::to_string(k + 1), p.str()});
        }
        out.push_back({{"size", po[k].size()}, {"members", members}});
      }
      r.payload["orbits"] = out;
    } else {
      ordered_json items = ordered_json::array();
      r.tsv_header = {"plane", "on_cubic"};
      for (const auto& p : planes) {
        items.push_back(p.str());
        r.tsv_rows.push_back({p.str(), yes_no(p.lies_on_cubic())});
      }
      r.payload["planes"] = items;
    }
  } else if (what == "nodes") {
    r.anchor = "nodes of the Segre cubic";
    const auto nodes = segre::enumerate_nodes();
    r.payload["count"] = nodes.size();
    if (orbits) {
      ordered_json out = ordered_json::array();
      r.tsv_header = {"orbit", "node"};
      const auto no = segre::node_orbits();
      for (std::size_t k = 0; k < no.size(); ++k) {
        ordered_json members = ordered_json::array();
        for (const auto& n : no[k]) {
          members.push_back(n.str());
          r.tsv_rows.push_back({std::to_string(k + 1), n.str()});
        }
        out.push_back({{"size", no[k].size()}, {"members", members}});
      }
      r.payload["orbits"] = out;
    } else {
      ordered_json items = ordered_json::array();
      r.tsv_header = {"node", "jacobian_rank"};
      for (const auto& n : nodes) {
        items.push_back({{"node", n.str()}, {"jacobian_rank", segre::jacobian_rank(n.coords())}});
        r.tsv_rows.push_back({n.str(), std::to_string(segre::jacobian_rank(n.coords()))});
      }
      r.payload["nodes"] = items;
    }
  } else {
    throw InvalidInput("segre expects 'planes' or 'nodes'");
  }
  return r;
}

Report theta_report(const std::string& what) {
  Report r{"theta", ""};
  if (what == "count") {
    r.anchor = "theta characteristics of a genus-2 curve";
    const auto even = theta::enumerate_even();
    const auto odd = theta::enumerate_odd();
    r.pass = even.size() == 10 && odd.size() == 6;
    ordered_json items = ordered_json::array();
    for (const auto& t : even) items.push_back(t.str());
    r.payload["even"] = even.size();
    r.payload["odd"] = odd.size();
    r.payload["total"] = even.size() + odd.size();
    r.payload["even_classes"] = items;
    r.tsv_header = {"even", "odd", "total"};
    r.tsv_rows.push_back({std::to_string(even.size()), std::to_string(odd.size()),
                          std::to_string(even.size() + odd.size())});
  } else if (what == "bielliptic") {
    r.anchor = "even theta characteristics invariant under a bielliptic involution";
    const auto rho = theta::bielliptic_involution();
    const auto fixed = theta::bielliptic_fixed(rho);
    const auto swapped = theta::bielliptic_swapped(rho);
    ordered_json inv = ordered_json::array();
    r.tsv_header = {"class", "status", "expression"};
    for (const auto& e : theta::bielliptic_invariant_expressions()) {
      inv.push_back({{"expression", e.text}, {"class", e.theta.str()}});
    }
    ordered_json fixed_json = ordered_json::array();
    for (const auto& t : fixed) {
      fixed_json.push_back(t.str());
      std::string expr;
      for (const auto& e : theta::bielliptic_invariant_expressions())
        if (e.theta == t) expr = e.text;
      r.tsv_rows.push_back({t.str(), "fixed", expr});
    }
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : swapped) {
      pairs.push_back({a.str(), b.str()});
      r.tsv_rows.push_back({a.str(), "swapped", ""});
      r.tsv_rows.push_back({b.str(), "swapped", ""});
    }
    ordered_json moved = ordered_json::array();
    std::set<theta::EvenTheta> moved_classes;
    for (const auto& e : theta::bielliptic_moved_expressions()) {
      moved.push_back({{"expression", e.text}, {"class", e.theta.str()}});
      moved_classes.insert(e.theta);
    }
    bool listed_match = true;
    for (const auto& e : theta::bielliptic_invariant_expressions())
      listed_match = listed_match && std::find(fixed.begin(), fixed.end(), e.theta) != fixed.end();
    r.pass = fixed.size() == 4 && listed_match;
    r.payload["involution"] = rho.str();
    r.payload["fixed_count"] = fixed.size();
    r.payload["fixed"] = fixed_json;
    r.payload["invariant_expressions"] = inv;
    r.payload["swapped_pairs"] = pairs;
    r.payload["moved_expressions"] = moved;
    r.payload["moved_expression_classes"] = moved_classes.size();
  } else if (what == "pairs") {
    r.anchor = "pairs of genus-1 theta characteristics of equal parity";
    const auto counts = theta::genus1_pair_counts();
    r.payload["even_even"] = counts.even_even;
    r.payload["odd_odd"] = counts.odd_odd;
    r.payload["same_parity"] = counts.same_parity;
    r.tsv_header = {"even_even", "odd_odd", "same_parity"};
    r.tsv_rows.push_back({std::to_string(counts.even_even), std::to_string(counts.odd_odd),
                          std::to_string(counts.same_parity)});
  } else {
    throw InvalidInput("theta expects 'count', 'bielliptic' or 'pairs'");
  }
  return r;
}

Report molien_report(std::size_t max_degree, bool quotient) {
  Report r{"molien", quotient ? "graded dimensions of the invariant ring of the Segre cubic quotient"
                              : "graded dimensions of polynomial invariants of the split-triples group"};
  if (max_degree > segre::kDefaultTruncation) {
    throw InvalidInput("--max-degree must not exceed " + std::to_string(segre::kDefaultTruncation));
  }
  ordered_json rows = ordered_json::array();
  if (quotient) {
    r.tsv_header = {"degree", "molien", "reynolds"};
    for (std::size_t d = 0; d <= max_degree; ++d) {
      const long molien = segre::quotient_dimension_molien(d);
      ordered_json row{{"degree", d}, {"dimension", molien}};
      std::string reynolds_cell;
      if (d <= segre::kCrossCheckMaxDegree) {
        const long reynolds = segre::quotient_dimension_reynolds(d);
        row["reynolds"] = reynolds;
        reynolds_cell = std::to_string(reynolds);
        r.pass = r.pass && reynolds == molien;
      } else {
        row["reynolds"] = nullptr;
      }
      rows.push_back(row);
      r.tsv_rows.push_back({std::to_string(d), std::to_string(molien), reynolds_cell});
    }
  } else {
    const auto g = split_triples_group();
    const auto series = segre::molien_series(g);
    r.tsv_header = {"degree", "dimension"};
    for (std::size_t d = 0; d <= max_degree; ++d) {
      const long dim = series.coefficient(d).to_long();
      rows.push_back({{"degree", d}, {"dimension", dim}});
      r.tsv_rows.push_back({std::to_string(d), std::to_string(dim)});
    }
  }
  r.payload["quotient"] = quotient;
  r.payload["dimensions"] = rows;
  return r;
}

Report verify_all_report() {
  Report r{"verify-all", "all reproduction criteria"};
  ordered_json criteria = ordered_json::array();
  r.tsv_header = {"id", "status", "title", "detail"};
  for (const auto& c : verify::run_all()) {
    criteria.push_back({{"id", c.id},
                        {"title", c.title},
                        {"anchor", c.anchor},
                        {"status", c.passed ? "pass" : "fail"},
                        {"detail", c.detail}});
    r.tsv_rows.push_back({std::to_string(c.id), c.passed ? "pass" : "fail", c.title, c.detail});
    r.pass = r.pass && c.passed;
  }
  ordered_json scope = ordered_json::array();
  for (const auto& item : verify::declared_out_of_scope()) {
    scope.push_back(
        {{"statement", item.statement}, {"reason", item.reason}, {"status", "declared out of scope"}});
    r.tsv_rows.push_back({"-", "declared out of scope", item.statement, item.reason});
  }
  r.payload["criteria"] = criteria;
  r.payload["out_of_scope"] = scope;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of divisor computations on the moduli of even genus-2 spin curves",
               "evenspin"};
  app.require_subcommand(1);
  app.fallthrough();
  bool tsv = false;
  app.add_flag("--tsv", tsv, "Emit tab-separated values instead of JSON");

  std::function<Report()> action;

  auto* table = app.add_subcommand("table", "Intersection table of boundary classes with F-curves");
  table->callback([&] { action = table_report; });

  std::string class_text;
  bool basis3 = false;
  auto* nef = app.add_subcommand("nef", "Nef/ample test with F-curve certificate");
  nef->add_option("--class", class_text, "Coefficients a,b,c,d of A0,B0,A1,B1 (p/q or integers)")
      ->required()
      ->allow_extra_args(false);
  nef->add_flag("--basis3", basis3, "Read three coefficients in the basis A0,B0,B1");
  nef->callback([&] { action = [&] { return nef_report(class_text, basis3); }; });

  auto* relation = app.add_subcommand("relation", "Kernel of the full F-curve pairing");
  relation->callback([&] { action = relation_report; });

  std::string model;
  auto* lct = app.add_subcommand("lct", "Log canonical threshold");
  lct->add_option("--model", model, "spin or inv")->required();
  lct->callback([&] { action = [&] { return lct_report(model); }; });

  std::string eps_text;
  auto* classify = app.add_subcommand("classify", "Regime of the log canonical model");
  classify->add_option("--epsilon", eps_text, "Rational epsilon, p/q or integer")->required();
  classify->callback([&] { action = [&] { return classify_report(eps_text); }; });

  auto* fiber = app.add_subcommand("fiber-degrees", "Forgetful-map degrees over the boundary");
  fiber->callback([&] { action = fiber_report; });

  int n = 6;
  bool list = false;
  auto* fcurves = app.add_subcommand("fcurves", "Enumerate F-curves");
  fcurves->add_option("--n", n, "Number of marked points (4..9)")->required();
  fcurves->add_flag("--list", list, "List every F-curve");
  fcurves->callback([&] { action = [&] { return fcurves_report(n, list); }; });

  std::string segre_what;
  bool orbits = false;
  auto* segre_cmd = app.add_subcommand("segre", "Planes and nodes of the Segre cubic");
  segre_cmd->add_option("what", segre_what, "planes or nodes")->required();
  segre_cmd->add_flag("--orbits", orbits, "Group into orbits of the split-triples group");
  segre_cmd->callback([&] { action = [&] { return segre_report(segre_what, orbits); }; });

  std::string theta_what;
  auto* theta_cmd = app.add_subcommand("theta", "Theta-characteristic combinatorics");
  theta_cmd->add_option("what", theta_what, "count, bielliptic or pairs")->required();
  theta_cmd->callback([&] { action = [&] { return theta_report(theta_what); }; });

  std::size_t max_degree = 6;
  bool quotient = false;
  auto* molien = app.add_subcommand("molien", "Graded invariant dimensions");
  molien->add_option("--max-degree", max_degree, "Highest degree to report")->required();
  molien->add_flag("--quotient", quotient, "Dimensions for the quotient by (s1, s3)");
  molien->callback([&] { action = [&] { return molien_report(max_degree, quotient); }; });

  auto* verify_all = app.add_subcommand("verify-all", "Run every reproduction criterion");
  verify_all->callback([&] { action = verify_all_report; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  Report report;
  try {
    report = action();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const VerificationFailure& e) {
    report.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    report.pass = false;
    report.payload["error"] = e.what();
    report.tsv_header = {"error"};
    report.tsv_rows = {{e.what()}};
  }

  if (tsv) {
    out << report.to_tsv();
  } else {
    out << report.to_json().dump() << '\n';
  }
  return report.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace evenspin::cli
