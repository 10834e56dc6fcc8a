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


// Command-line front end: solve, sweep, regions, calc, check, simulate,
// hotelling, oligopoly and monopoly.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "searchduo/conditions.h"
#include "searchduo/demand.h"
#include "searchduo/equilibrium.h"
#include "searchduo/firm.h"
#include "searchduo/io.h"
#include "searchduo/parallel.h"
#include "searchduo/sim.h"
#include "searchduo/variants.h"

namespace {

using searchduo::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

struct Common {
  std::string config;
  std::optional<double> s;
  std::string variant;
  bool deterministic = false;
  int threads = 0;
  std::string out;
};

struct Prices {
  std::optional<double> px;
  std::optional<double> py;
  std::optional<double> cex;
  std::optional<double> cey;
};

searchduo::MarketParams BuildMarket(const Common& c) {
  searchduo::MarketParams m =
      c.config.empty()
          ? searchduo::MarketParams::Symmetric(searchduo::Distribution::Uniform(),
                                               0.0, 0.1)
          : searchduo::LoadMarket(c.config);
  if (c.s) {
    if (!(*c.s >= 0.0)) throw searchduo::ConfigError("--s", "must be >= 0");
    m.s = *c.s;
  }
  if (!c.variant.empty()) {
    m.variant = searchduo::ParseVariant(c.variant, "--variant");
  }
  try {
    m.Validate();
  } catch (const std::invalid_argument& e) {
    throw searchduo::ConfigError("market", e.what());
  }
  return m;
}

int Threads(const Common& c) {
  if (c.deterministic) return 1;
  return c.threads > 0 ? c.threads : searchduo::DefaultThreads();
}

searchduo::PriceProfile BuildPrices(const Prices& p,
                                    const searchduo::MarketParams& m) {
  if (!p.px || !p.py) {
    throw searchduo::ConfigError("--px/--py", "both prices are required");
  }
  searchduo::PriceProfile prices{*p.px, *p.py, p.cex.value_or(*p.px),
                                 p.cey.value_or(*p.py)};
  try {
    searchduo::ValidatePrices(prices, m);
  } catch (const std::invalid_argument& e) {
    throw searchduo::ConfigError("prices", e.what());
  }
  return prices;
}

void AddPriceOptions(CLI::App* sub, Prices& p) {
  sub->add_option("--px", p.px, "posted price of X");
  sub->add_option("--py", p.py, "posted price of Y");
  sub->add_option("--cex", p.cex, "price of X expected by consumers");
  sub->add_option("--cey", p.cey, "price of Y expected by consumers");
}

Json Envelope(const std::string& command, const searchduo::MarketParams* m) {
  Json j{{"command", command}, {"settings", searchduo::Settings()}};
  if (m) j["market"] = searchduo::ToJson(*m);
  return j;
}

void Emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw searchduo::ConfigError("--out", "cannot write " + c.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consumer-search duopoly laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--config", common.config, "market JSON file");
  app.add_option("--s", common.s, "search cost (overrides the config)");
  app.add_option("--variant", common.variant, "known | unknown | full");
  app.add_flag("--deterministic", common.deterministic,
               "run everything on one thread");
  app.add_option("--threads", common.threads, "worker threads (0: all)");
  app.add_option("--out", common.out, "output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "equilibrium prices");

  auto* sweep = app.add_subcommand("sweep", "comparative statics CSV");
  std::string sweep_param = "s";
  double sweep_from = 0.02;
  double sweep_to = 0.6;
  int sweep_steps = 30;
  sweep->add_option("--param", sweep_param, "s | cX | cY | muX");
  sweep->add_option("--from", sweep_from);
  sweep->add_option("--to", sweep_to);
  sweep->add_option("--steps", sweep_steps)->check(CLI::PositiveNumber);

  auto* regions = app.add_subcommand("regions", "decision regions CSV/SVG");
  Prices region_prices;
  AddPriceOptions(regions, region_prices);
  int grid_n = 512;
  std::string home = "X";
  std::string svg;
  regions->add_option("--grid", grid_n, "cells per axis");
  regions->add_option("--home", home, "X | Y");
  regions->add_option("--svg", svg, "also write an SVG map here");

  auto* calc = app.add_subcommand("calc", "profit and its derivatives");
  Prices calc_prices;
  AddPriceOptions(calc, calc_prices);

  auto* check = app.add_subcommand("check", "sufficient-condition checks");
  Prices check_prices;
  AddPriceOptions(check, check_prices);
  int check_grid = 200;
  check->add_option("--grid", check_grid, "grid points per axis");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo oracle");
  Prices sim_prices;
  AddPriceOptions(simulate, sim_prices);
  std::int64_t sim_n = 1000000;
  std::uint64_t seed = 1;
  simulate->add_option("--n", sim_n, "consumers");
  simulate->add_option("--seed", seed);

  auto* hotelling = app.add_subcommand("hotelling", "negative correlation");
  double h_mux = 0.75;
  double h_cx = 0.2;
  double h_cy = 0.2;
  hotelling->add_option("--mux", h_mux);
  hotelling->add_option("--cx", h_cx);
  hotelling->add_option("--cy", h_cy);

  auto* oligopoly = app.add_subcommand("oligopoly", "symmetric n firms");
  int firms = 3;
  oligopoly->add_option("--n", firms, "number of firms")->check(
      CLI::Range(2, 1000));

  auto* monopoly = app.add_subcommand("monopoly", "monopoly price");
  std::optional<double> mono_cost;
  monopoly->add_option("--c", mono_cost, "cost (default: firm X)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*hotelling) {
      const double s = common.s.value_or(0.1);
      const searchduo::HotellingResult r =
          searchduo::HotellingPrices(h_mux, 1.0 - h_mux, h_cx, h_cy, s);
      Json j = Envelope("hotelling", nullptr);
      j["input"] = Json{{"muX", searchduo::Number(h_mux)},
                        {"cX", searchduo::Number(h_cx)},
                        {"cY", searchduo::Number(h_cy)},
                        {"s", searchduo::Number(s)}};
      j["result"] = searchduo::ToJson(r);
      Emit(common, searchduo::Dump(j));
      return kExitOk;
    }

    const searchduo::MarketParams market = BuildMarket(common);

    if (*solve) {
      Json j = Envelope("solve", &market);
      Json list = Json::array();
      for (const auto& r : searchduo::Solve(market)) {
        list.push_back(searchduo::ToJson(r));
      }
      j["equilibria"] = list;
      Emit(common, searchduo::Dump(j));
    } else if (*sweep) {
      searchduo::SweepParam param;
      if (sweep_param == "s") {
        param = searchduo::SweepParam::kS;
      } else if (sweep_param == "cX") {
        param = searchduo::SweepParam::kCostX;
      } else if (sweep_param == "cY") {
        param = searchduo::SweepParam::kCostY;
      } else if (sweep_param == "muX") {
        param = searchduo::SweepParam::kMuX;
      } else {
        throw searchduo::ConfigError("--param", "expected s, cX, cY or muX");
      }
      std::vector<double> grid(sweep_steps);
      for (int k = 0; k < sweep_steps; ++k) {
        grid[k] = sweep_steps == 1 ? sweep_from
                  : k + 1 == sweep_steps
                      ? sweep_to
                      : sweep_from + (sweep_to - sweep_from) * k /
                                         (sweep_steps - 1.0);
      }
      const auto rows =
          searchduo::Sweep(market, param, grid, Threads(common));
      Json settings = searchduo::Settings();
      settings["param"] = sweep_param;
      settings["market"] = searchduo::ToJson(market);
      std::ostringstream os;
      searchduo::WriteSweepCsv(rows, settings, os);
      Emit(common, os.str());
    } else if (*regions) {
      if (home != "X" && home != "Y") {
        throw searchduo::ConfigError("--home", "expected X or Y");
      }
      if (grid_n < 2) throw searchduo::ConfigError("--grid", "must be >= 2");
      const searchduo::PriceProfile prices =
          BuildPrices(region_prices, market);
      const searchduo::RegionGrid grid = searchduo::RegionMap(
          prices, market, home == "X" ? searchduo::Firm::kX
                                      : searchduo::Firm::kY,
          grid_n);
      std::ostringstream os;
      searchduo::WriteRegionCsv(grid, os);
      Emit(common, os.str());
      if (!svg.empty()) {
        std::ofstream f(svg, std::ios::binary);
        if (!f) throw searchduo::ConfigError("--svg", "cannot write " + svg);
        searchduo::WriteRegionSvg(grid, f);
      }
    } else if (*calc) {
      const searchduo::PriceProfile prices = BuildPrices(calc_prices, market);
      Json j = Envelope("calc", &market);
      j["prices"] = searchduo::ToJson(prices);
      for (searchduo::Firm f : {searchduo::Firm::kX, searchduo::Firm::kY}) {
        Json firm = searchduo::ToJson(searchduo::Calculus(f, prices, market));
        firm["demand"] = searchduo::ToJson(searchduo::Demand(f, prices, market));
        j[searchduo::FirmName(f)] = firm;
      }
      j["surplus"] = searchduo::ToJson(searchduo::Surplus(prices, market));
      Emit(common, searchduo::Dump(j));
    } else if (*check) {
      Json j = Envelope("check", &market);
      j["lemma1"] = Json{
          {"X", searchduo::ToJson(searchduo::CheckLemma1(
                    market.x.dist, market.x.cost, check_grid))},
          {"Y", searchduo::ToJson(searchduo::CheckLemma1(
                    market.y.dist, market.y.cost, check_grid))}};
      j["lemma2"] =
          searchduo::ToJson(searchduo::CheckLemma2(market, check_grid));
      if (market.s > 0.0) {
        searchduo::PriceProfile prices;
        if (check_prices.px || check_prices.py) {
          prices = BuildPrices(check_prices, market);
        } else {
          const auto r = searchduo::SolveHighest(market);
          prices = searchduo::PriceProfile::Pure(r.p_x, r.p_y);
        }
        j["prices"] = searchduo::ToJson(prices);
        j["thm1"] = searchduo::ToJson(
            searchduo::CheckThm1(market, prices, check_grid));
      } else {
        j["thm1"] = Json{{"skipped", "needs a positive search cost"}};
      }
      Emit(common, searchduo::Dump(j));
    } else if (*simulate) {
      const searchduo::PriceProfile prices = BuildPrices(sim_prices, market);
      const searchduo::SimReport r = searchduo::Simulate(
          market, prices, sim_n, seed, Threads(common));
      Json j = Envelope("simulate", &market);
      j["prices"] = searchduo::ToJson(prices);
      j["simulation"] = searchduo::ToJson(r);
      j["comparison"] = searchduo::ToJson(searchduo::Compare(
          r, searchduo::Demand(searchduo::Firm::kX, prices, market),
          searchduo::Demand(searchduo::Firm::kY, prices, market),
          searchduo::Surplus(prices, market).consumer_surplus));
      Emit(common, searchduo::Dump(j));
    } else if (*oligopoly) {
      const searchduo::OligopolyResult r = searchduo::OligopolySolve(
          firms, market.x.dist, market.x.cost, market.s);
      Json j = Envelope("oligopoly", &market);
      j["n"] = firms;
      j["result"] = searchduo::ToJson(r);
      Emit(common, searchduo::Dump(j));
    } else if (*monopoly) {
      const double c = mono_cost.value_or(market.x.cost);
      const double argmax = searchduo::MonopolyPrice(market.x.dist, c);
      searchduo::MarketParams large =
          searchduo::MarketParams::Symmetric(market.x.dist, c, 2.0,
                                             market.variant);
      if (large.variant == searchduo::Variant::kFullInformation) {
        large.variant = searchduo::Variant::kKnown;
      }
      const auto limit = searchduo::SolveHighest(large);
      Json j = Envelope("monopoly", &market);
      j["cost"] = searchduo::Number(c);
      j["argmax_price"] = searchduo::Number(argmax);
      j["argmax_profit"] =
          searchduo::Number((argmax - c) * (1.0 - market.x.dist.Cdf(argmax)));
      j["large_s_equilibrium_price"] = searchduo::Number(limit.p_x);
      Emit(common, searchduo::Dump(j));
    }
  } catch (const searchduo::SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& p : e.tail()) {
      std::cerr << "  (" << p[0] << ", " << p[1] << ")\n";
    }
    return kExitNoConvergence;
  } catch (const searchduo::ConfigError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
