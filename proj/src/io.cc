// Copyright 2026 The searchduo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "searchduo/io.h"

#include <cmath>
#include <fstream>
#include <ostream>
#include <set>

#include "searchduo/format.h"
#include "searchduo/quadrature.h"

namespace searchduo {
namespace {

void RejectUnknownKeys(const Json& j, const std::string& path,
                       const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError(path + "." + it.key(), "unknown key");
    }
  }
}

const Json& Require(const Json& j, const std::string& key,
                    const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path + "." + key, "missing");
  return j.at(key);
}

double AsNumber(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "expected a finite number");
  return x;
}

std::vector<double> AsNumbers(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array of numbers");
  std::vector<double> out;
  for (size_t k = 0; k < j.size(); ++k) {
    out.push_back(AsNumber(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

FirmParams ParseFirm(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  RejectUnknownKeys(j, path, {"cost", "mu", "dist"});
  FirmParams f;
  if (j.contains("cost")) f.cost = AsNumber(j.at("cost"), path + ".cost");
  f.mu = AsNumber(Require(j, "mu", path), path + ".mu");
  f.dist = ParseDistribution(Require(j, "dist", path), path + ".dist");
  if (!(f.cost >= 0.0 && f.cost < 1.0)) {
    throw ConfigError(path + ".cost", "must lie in [0, 1)");
  }
  if (!(f.mu >= 0.0 && f.mu <= 1.0)) {
    throw ConfigError(path + ".mu", "must lie in [0, 1]");
  }
  return f;
}

Json BreakdownJson(const DemandBreakdown& d) {
  return Json{{"loyal_no_search", Number(d.loyal_no_search)},
              {"loyal_after_search", Number(d.loyal_after_search)},
              {"switchers_in", Number(d.switchers_in)},
              {"exit_mass", Number(d.exit_mass)},
              {"search_mass", Number(d.search_mass)},
              {"total", Number(d.total())}};
}

Json SubCheckJson(const SubCheck& c) {
  Json j{{"holds", c.holds}};
  if (!c.holds) {
    j["firm"] = c.firm;
    j["at"] = Number(c.at);
    j["value"] = Number(c.value);
  }
  return j;
}

Json Thm1FirmJson(const Thm1FirmReport& r) {
  Json j{{"holds", r.holds()},
         {"pointwise_holds", r.pointwise_holds},
         {"worst_w", Number(r.worst_w)},
         {"worst_slack", Number(r.worst_slack)}};
  if (r.has_uniform_form) {
    j["uniform_condition"] = Json{{"holds", r.uniform_holds},
                                  {"lhs", Number(r.uniform_lhs)},
                                  {"rhs", Number(r.uniform_rhs)}};
  }
  return j;
}

}  // namespace

Distribution ParseDistribution(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const Json& type = Require(j, "type", path);
  if (!type.is_string()) throw ConfigError(path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();
  try {
    if (kind == "uniform") {
      RejectUnknownKeys(j, path, {"type"});
      return Distribution::Uniform();
    }
    if (kind == "truncexp") {
      RejectUnknownKeys(j, path, {"type", "lambda"});
      const double rate =
          j.contains("lambda") ? AsNumber(j.at("lambda"), path + ".lambda")
                               : 1.0;
      return Distribution::TruncatedExponential(rate);
    }
    if (kind == "step") {
      RejectUnknownKeys(j, path, {"type", "breaks", "densities"});
      return Distribution::Step(
          AsNumbers(Require(j, "breaks", path), path + ".breaks"),
          AsNumbers(Require(j, "densities", path), path + ".densities"));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(path + ".type",
                    "expected \"uniform\", \"truncexp\" or \"step\"");
}

Variant ParseVariant(const std::string& name, const std::string& path) {
  if (name == "known") return Variant::kKnown;
  if (name == "unknown") return Variant::kUnknown;
  if (name == "full") return Variant::kFullInformation;
  throw ConfigError(path, "expected \"known\", \"unknown\" or \"full\"");
}

MarketParams ParseMarket(const Json& j) {
  const std::string root = "$";
  if (!j.is_object()) throw ConfigError(root, "expected an object");
  RejectUnknownKeys(j, root, {"firms", "s", "variant"});
  const Json& firms = Require(j, "firms", root);
  if (!firms.is_array() || firms.size() != 2) {
    throw ConfigError(root + ".firms", "expected an array of two firms");
  }
  MarketParams m;
  m.x = ParseFirm(firms[0], root + ".firms[0]");
  m.y = ParseFirm(firms[1], root + ".firms[1]");
  if (j.contains("s")) m.s = AsNumber(j.at("s"), root + ".s");
  if (!(m.s >= 0.0)) throw ConfigError(root + ".s", "must be nonnegative");
  if (j.contains("variant")) {
    const Json& v = j.at("variant");
    if (!v.is_string()) {
      throw ConfigError(root + ".variant", "expected a string");
    }
    m.variant = ParseVariant(v.get<std::string>(), root + ".variant");
  }
  if (std::abs(m.x.mu + m.y.mu - 1.0) > 1e-12) {
    throw ConfigError(root + ".firms", "shares mu must sum to 1");
  }
  return m;
}

MarketParams LoadMarket(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file, "cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(file, e.what());
  }
  return ParseMarket(j);
}

Json Number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return RoundOutput(x);
}

Json ToJson(const Distribution& d) {
  switch (d.kind()) {
    case DistKind::kUniform:
      return Json{{"type", "uniform"}};
    case DistKind::kTruncatedExponential:
      return Json{{"type", "truncexp"}, {"lambda", Number(d.rate())}};
    case DistKind::kStep: {
      Json breaks = Json::array();
      Json dens = Json::array();
      for (double b : d.breaks()) breaks.push_back(Number(b));
      for (double v : d.densities()) dens.push_back(Number(v));
      return Json{{"type", "step"}, {"breaks", breaks}, {"densities", dens}};
    }
  }
  return nullptr;
}

Json ToJson(const MarketParams& m) {
  Json firms = Json::array();
  for (const FirmParams* f : {&m.x, &m.y}) {
    firms.push_back(Json{{"cost", Number(f->cost)},
                         {"mu", Number(f->mu)},
                         {"dist", ToJson(f->dist)}});
  }
  return Json{{"firms", firms},
              {"s", Number(m.s)},
              {"variant", VariantName(m.variant)}};
}

Json ToJson(const PriceProfile& p) {
  return Json{{"pX", Number(p.p_x)},
              {"pY", Number(p.p_y)},
              {"ceX", Number(p.ce_x)},
              {"ceY", Number(p.ce_y)}};
}

Json ToJson(const DemandBreakdown& d) { return BreakdownJson(d); }

Json ToJson(const SurplusReport& r) {
  return Json{{"consumer_surplus", Number(r.consumer_surplus)},
              {"profit_X", Number(r.profit_x)},
              {"profit_Y", Number(r.profit_y)},
              {"total_surplus", Number(r.total_surplus)},
              {"exit_mass", Number(r.exit_mass)},
              {"search_mass", Number(r.search_mass)},
              {"switch_share_X", Number(r.switch_share_x)},
              {"switch_share_Y", Number(r.switch_share_y)}};
}

Json ToJson(const FirmCalculusReport& r) {
  return Json{{"profit", Number(r.profit)},
              {"foc", Number(r.foc)},
              {"soc", Number(r.soc)},
              {"cross_partial", Number(r.cross_partial)},
              {"foc_star", Number(r.foc_star)},
              {"dfoc_ds", Number(r.dfoc_ds)},
              {"dfoc_ds_sign", r.dfoc_ds < 0   ? "negative"
                               : r.dfoc_ds > 0 ? "positive"
                                               : "zero"},
              {"one_sided", r.one_sided}};
}

Json ToJson(const EquilibriumResult& r) {
  return Json{{"pX", Number(r.p_x)},
              {"pY", Number(r.p_y)},
              {"demand_X", ToJson(r.demand_x)},
              {"demand_Y", ToJson(r.demand_y)},
              {"profit_X", Number(r.profit_x)},
              {"profit_Y", Number(r.profit_y)},
              {"foc_residual_X", Number(r.foc_x)},
              {"foc_residual_Y", Number(r.foc_y)},
              {"stable", r.stable},
              {"br_slope_X", Number(r.br_slope_x)},
              {"br_slope_Y", Number(r.br_slope_y)},
              {"br_slope_product", Number(r.br_slope_product)},
              {"dP_ds_X", Number(r.dp_ds_x)},
              {"dP_ds_Y", Number(r.dp_ds_y)},
              {"multiplicity", MultiplicityName(r.multiplicity)},
              {"iterations", r.iterations}};
}

Json ToJson(const Lemma1Report& r) {
  return Json{{"holds", r.holds},
              {"worst_P", Number(r.worst_price)},
              {"worst_w", Number(r.worst_w)},
              {"worst_slack", Number(r.worst_slack)}};
}

Json ToJson(const Lemma2Report& r) {
  return Json{{"holds", r.holds()},
              {"equal_shares", SubCheckJson(r.equal_shares)},
              {"nonincreasing_density", SubCheckJson(r.nonincreasing_density)},
              {"bounded_elasticity", SubCheckJson(r.bounded_elasticity)}};
}

Json ToJson(const Thm1Report& r) {
  if (r.no_search_regime) {
    return Json{{"holds", true}, {"regime", "no-search"}};
  }
  return Json{{"holds", r.holds()},
              {"regime", "search"},
              {"X", Thm1FirmJson(r.x)},
              {"Y", Thm1FirmJson(r.y)}};
}

Json ToJson(const HotellingResult& r) {
  return Json{{"raw_pX", Number(r.raw_x)},
              {"raw_pY", Number(r.raw_y)},
              {"pX", Number(r.p_x)},
              {"pY", Number(r.p_y)},
              {"weighted_avg", Number(r.weighted_avg)},
              {"marginal_vX_from_X", Number(r.marginal_from_x)},
              {"marginal_vX_from_Y", Number(r.marginal_from_y)},
              {"within_bounds", r.within_bounds},
              {"formula_condition", r.formula_condition},
              {"valid", r.valid()}};
}

Json ToJson(const OligopolyResult& r) {
  return Json{{"price", Number(r.price)},
              {"foc_residual", Number(r.foc_residual)},
              {"roots_found", r.roots_found}};
}

Json ToJson(const SimReport& r) {
  return Json{{"n", r.n},
              {"seed", r.seed},
              {"demand_X", ToJson(r.demand_x)},
              {"demand_Y", ToJson(r.demand_y)},
              {"se_X", ToJson(r.se_x)},
              {"se_Y", ToJson(r.se_y)},
              {"consumer_surplus", Number(r.consumer_surplus)},
              {"consumer_surplus_se", Number(r.consumer_surplus_se)}};
}

Json ToJson(const Comparison& c) {
  Json rows = Json::array();
  for (const ZScore& z : c.rows) {
    rows.push_back(Json{{"component", z.component},
                        {"simulated", Number(z.simulated)},
                        {"exact", Number(z.exact)},
                        {"se", Number(z.se)},
                        {"z", Number(z.z)}});
  }
  return Json{{"pass", c.pass}, {"max_abs_z", Number(c.max_abs_z)},
              {"rows", rows}};
}

Json Settings() {
  const SolveOptions solve;
  return Json{{"quadrature", "gauss-legendre"},
              {"quadrature_nodes", kQuadratureNodes},
              {"solve_tolerance", Number(solve.tolerance)},
              {"solve_max_iterations", solve.max_iterations},
              {"solve_distinct", Number(solve.distinct)},
              {"bracket_points", solve.bracket_points},
              {"best_response_grid", 400},
              {"stability_step", Number(1e-4)},
              {"unknown_foc_step", Number(1e-6)},
              {"condition_grid", 200},
              {"sim_chunk", kSimChunk},
              {"output_digits", kOutputDigits}};
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

void WriteSweepCsv(const std::vector<SweepRow>& rows, const Json& settings,
                   std::ostream& out) {
  for (auto it = settings.begin(); it != settings.end(); ++it) {
    out << "# " << it.key() << "=" << it.value().dump() << "\n";
  }
  out << "param,pX,pY,piX,piY,CS,TS,exit,search,switchX,switchY\n";
  for (const SweepRow& r : rows) {
    const double cols[] = {r.value,        r.p_x,
                           r.p_y,          r.profit_x,
                           r.profit_y,     r.consumer_surplus,
                           r.total_surplus, r.exit_mass,
                           r.search_mass,  r.switch_share_x,
                           r.switch_share_y};
    bool first = true;
    for (double c : cols) {
      out << (first ? "" : ",") << FormatNumber(c);
      first = false;
    }
    out << "\n";
  }
}

}  // namespace searchduo
