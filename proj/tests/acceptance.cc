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


// Acceptance suite: one PASS/FAIL line per criterion. The exit status is the
// number of failures not listed as known deviations.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "searchduo/demand.h"
#include "searchduo/equilibrium.h"
#include "searchduo/firm.h"
#include "searchduo/parallel.h"
#include "searchduo/sim.h"
#include "searchduo/variants.h"
#include "test_util.h"

namespace searchduo {
namespace {

using testing::AwayFromKinks;
using testing::Draws;
using testing::KnownDemandOracle;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && failed.insert(what).second) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }

  std::set<std::string> failed;
};

const std::set<int> kKnownDeviations = {6, 12};

std::vector<double> Linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = lo + (hi - lo) * k / (n - 1.0);
  out.back() = hi;
  return out;
}

MarketParams Uniform(double s) {
  return MarketParams::Symmetric(Distribution::Uniform(), 0.0, s);
}

void Figure1(Outcome& out) {
  const MarketParams m = Uniform(0.1);
  const PriceProfile p = PriceProfile::Pure(0.6, 0.45);
  const DemandBreakdown dx = Demand(Firm::kX, p, m);
  const DemandBreakdown dy = Demand(Firm::kY, p, m);
  const double ox = KnownDemandOracle(Firm::kX, p, m).total;
  const double oy = KnownDemandOracle(Firm::kY, p, m).total;
  out.detail << "D_X=" << dx.total() << " D_Y=" << dy.total();
  out.Require(std::abs(dx.total() - ox) <= 1e-9, "D_X vs polygon");
  out.Require(std::abs(dy.total() - oy) <= 1e-9, "D_Y vs polygon");
  out.Require(std::abs(dx.total() - 0.24) <= 1e-9, "D_X = 0.24");
  out.Require(std::abs(dy.total() - 0.4375) <= 1e-9, "D_Y = 0.4375");
  const SimReport sim = Simulate(m, p, 1000000, 1, DefaultThreads());
  const Comparison c = Compare(sim, dx, dy, Surplus(p, m).consumer_surplus);
  out.detail << " max|z|=" << c.max_abs_z;
  out.Require(c.pass, "Monte Carlo within 4 SE");
}

std::vector<SweepRow> SGridSweep() {
  return Sweep(Uniform(0.1), SweepParam::kS, Linspace(0.02, 0.6, 30),
               DefaultThreads());
}

void Theorem1(Outcome& out) {
  const std::vector<SweepRow> rows = SGridSweep();
  const double floor = 1.0 / (2.0 * std::sqrt(2.0));
  int switching = 0;
  for (size_t k = 0; k < rows.size(); ++k) {
    const SweepRow& r = rows[k];
    out.Require(r.p_x >= floor && r.p_y >= floor, "price >= 1/(2 sqrt 2)");
    const bool switches = r.switch_share_x > 0.0 || r.switch_share_y > 0.0;
    if (switches) {
      ++switching;
      if (k > 0) out.Require(r.p_x < rows[k - 1].p_x, "decreasing in s");
    } else {
      out.Require(std::abs(r.p_x - 0.5) <= 1e-8 &&
                      std::abs(r.p_y - 0.5) <= 1e-8,
                  "flat at 0.5 without switching");
    }
  }
  out.detail << "switching points=" << switching << " p(0.02)=" << rows[0].p_x
             << " p(0.6)=" << rows.back().p_x;
}

void ZeroCost(Outcome& out) {
  MarketParams full = Uniform(0.0);
  full.variant = Variant::kFullInformation;
  const double p0 = SolveHighest(full).p_x;
  const double p02 = SolveHighest(Uniform(0.02)).p_x;
  out.detail << "full-info=" << p0 << " s=0.02: " << p02
             << " gap=" << p02 - p0;
  out.Require(std::abs(p0 - (std::sqrt(2.0) - 1.0)) <= 1e-6, "sqrt(2) - 1");
  out.Require(p02 - p0 > 0.02, "gap > 0.02");
}

void LargeS(Outcome& out) {
  const MarketParams m = Uniform(1.2);
  const EquilibriumResult r = SolveHighest(m);
  const SurplusReport w = Surplus(PriceProfile::Pure(r.p_x, r.p_y), m);
  out.detail << "p=(" << r.p_x << ", " << r.p_y << ")";
  out.Require(std::abs(r.p_x - 0.5) <= 1e-8 && std::abs(r.p_y - 0.5) <= 1e-8,
              "prices 0.5");
  out.Require(w.switch_share_x == 0.0 && w.switch_share_y == 0.0,
              "no switching");
}

void Hotelling(Outcome& out) {
  const HotellingResult r = HotellingPrices(0.75, 0.25, 0.2, 0.2, 0.1);
  out.detail << "p=(" << r.raw_x << ", " << r.raw_y << ")";
  out.Require(std::abs(r.raw_x - 0.21053) <= 1e-5, "pX");
  out.Require(std::abs(r.raw_y - 0.16842) <= 1e-5, "pY");
  for (double s : {0.0, 0.05, 0.1, 0.2}) {
    const double avg = HotellingPrices(0.75, 0.25, 0.2, 0.2, s).weighted_avg;
    out.Require(std::abs(avg - 0.2) <= 1e-12, "weighted average 0.2");
  }
  out.detail << " valid=" << (r.valid() ? "yes" : "no");
}

void Unknown(Outcome& out) {
  MarketParams m = MarketParams::Symmetric(
      Distribution::Step({0.5}, {1.5, 0.5}), 0.0, 0.0, Variant::kUnknown);
  const double p0 = SolveUnknown(m).back().p_x;
  out.detail << "s=0: " << p0;
  out.Require(p0 >= 0.30 && p0 <= 0.32, "s=0 price in [0.30, 0.32]");
  std::vector<double> path;
  for (double s : Linspace(0.13, 0.19, 7)) {
    m.s = s;
    path.push_back(SolveUnknown(m).back().p_x);
  }
  for (size_t k = 1; k < path.size(); ++k) {
    out.Require(path[k] < path[k - 1], "strictly decreasing on [0.13, 0.19]");
  }
  const double d_lo = path.front() - 0.491;
  const double d_hi = path.back() - 0.384;
  out.detail << " s=0.13: " << path.front() << " vs 0.491 (diff " << d_lo
             << ") s=0.19: " << path.back() << " vs 0.384 (diff " << d_hi
             << ")";
  out.Require(std::abs(d_lo) <= 0.02, "endpoint 0.491");
  out.Require(std::abs(d_hi) <= 0.02, "endpoint 0.384");
  if (std::abs(d_lo) > 0.02 || std::abs(d_hi) > 0.02) {
    const double mono = MonopolyPrice(Distribution::Step({0.5}, {1.5, 0.5}), 0);
    out.detail << " [reconciliation warning: computed large-s monopoly price "
               << mono << " vs 0.25 quoted for this density]";
  }
}

// Profit with the rival's expectation moving with its price.
double ProfitShift(Firm i, PriceProfile p, const MarketParams& m, double d_own,
                   double d_rival) {
  p.posted(i) += d_own;
  p.posted(Rival(i)) += d_rival;
  p.expected(Rival(i)) += d_rival;
  return Profit(i, p, m);
}

void Derivatives(Outcome& out) {
  Draws draws(20261017);
  int tested = 0;
  double worst1 = 0.0;
  double worst2 = 0.0;
  while (tested < 50) {
    const MarketParams m = draws.AnyMarket(Variant::kKnown);
    const PriceProfile p = draws.AnyPrices(m);
    const PriceProfile pure = PriceProfile::Pure(p.p_x, p.p_y);
    const Firm i = draws.Uniform(0, 1) < 0.5 ? Firm::kX : Firm::kY;
    if (!AwayFromKinks(i, p, m, 2e-3) || !AwayFromKinks(i, pure, m, 2e-3)) {
      continue;
    }
    ++tested;
    const double h1 = 1e-5;
    const double foc = (ProfitShift(i, p, m, h1, 0) -
                        ProfitShift(i, p, m, -h1, 0)) / (2 * h1);
    MarketParams up = m;
    MarketParams down = m;
    up.s += h1;
    down.s -= h1;
    const double dfoc = (FocStar(i, p.p_x, p.p_y, up) -
                         FocStar(i, p.p_x, p.p_y, down)) / (2 * h1);
    const double h2 = 1e-4;
    const double soc = (ProfitShift(i, p, m, h2, 0) - 2 * Profit(i, p, m) +
                        ProfitShift(i, p, m, -h2, 0)) / (h2 * h2);
    const double cross =
        (ProfitShift(i, p, m, h2, h2) - ProfitShift(i, p, m, h2, -h2) -
         ProfitShift(i, p, m, -h2, h2) + ProfitShift(i, p, m, -h2, -h2)) /
        (4 * h2 * h2);
    worst1 = std::max({worst1, std::abs(Foc(i, p, m) - foc),
                       std::abs(DfocDs(i, p.p_x, p.p_y, m) - dfoc)});
    worst2 = std::max({worst2, std::abs(Soc(i, p, m) - soc),
                       std::abs(CrossPartial(i, p, m) - cross)});
  }
  out.detail << "draws=" << tested << " first-order err=" << worst1
             << " second-order err=" << worst2;
  out.Require(worst1 <= 1e-6, "first order within 1e-6");
  out.Require(worst2 <= 1e-4, "second order within 1e-4");
}

void Sensitivity(Outcome& out) {
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    MarketParams m = Uniform(0.05 + 0.04 * k);
    m.x.cost = 0.01 * k;
    m.x.mu = 0.45 + 0.01 * k;
    m.y.mu = 1.0 - m.x.mu;
    const EquilibriumResult r = SolveHighest(m);
    const std::array<double, 2> fd = ResolveSensitivity(m);
    for (int f = 0; f < 2; ++f) {
      const double ift = f == 0 ? r.dp_ds_x : r.dp_ds_y;
      worst = std::max(worst, std::abs(ift - fd[f]) /
                                  std::max(std::abs(fd[f]), 1e-12));
    }
  }
  out.detail << "points=10 max relative err=" << worst;
  out.Require(worst <= 1e-3, "IFT vs re-solve within 1e-3");
}

void Monotone(Outcome& out) {
  const std::vector<SweepRow> rows = SGridSweep();
  const double eps = 1e-10;
  for (size_t k = 1; k < rows.size(); ++k) {
    const SweepRow& a = rows[k - 1];
    const SweepRow& b = rows[k];
    out.Require(b.total_surplus <= a.total_surplus + eps, "TS nonincreasing");
    out.Require(b.profit_x + b.profit_y <= a.profit_x + a.profit_y + eps,
                "total profit nonincreasing");
    out.Require(b.exit_mass >= a.exit_mass - eps, "exit nondecreasing");
    out.Require(b.switch_share_x <= a.switch_share_x + eps &&
                    b.switch_share_y <= a.switch_share_y + eps,
                "switch share nonincreasing");
  }
  const std::vector<SweepRow> cost = Sweep(
      Uniform(0.1), SweepParam::kCostX, Linspace(0.0, 0.3, 16),
      DefaultThreads());
  for (size_t k = 1; k < cost.size(); ++k) {
    out.Require(cost[k].p_x > cost[k - 1].p_x && cost[k].p_y > cost[k - 1].p_y,
                "prices rise with c_X");
  }
  out.detail << "s-sweep TS " << rows.front().total_surplus << " -> "
             << rows.back().total_surplus << "; c_X sweep pX "
             << cost.front().p_x << " -> " << cost.back().p_x;
}

void Incumbent(Outcome& out) {
  MarketParams m = Uniform(0.1);
  m.x.mu = 1.0;
  m.y.mu = 0.0;
  const EquilibriumResult r = SolveHighest(m);
  const double mono = MonopolyPrice(m.x.dist, m.x.cost);
  out.detail << "pX=" << r.p_x << " monopoly=" << mono
             << " D_Y=" << r.demand_y.total();
  out.Require(std::abs(r.p_x - mono) <= 1e-8, "pX = monopoly price");
  out.Require(r.demand_y.total() == 0.0, "D_Y = 0");
}

void OracleEquivalence(Outcome& out) {
  Draws draws(11);
  const Variant variants[] = {Variant::kKnown, Variant::kUnknown,
                              Variant::kFullInformation};
  double worst = 0.0;
  int failed = 0;
  for (int k = 0; k < 50; ++k) {
    const MarketParams m = draws.AnyMarket(variants[k % 3]);
    const PriceProfile p = draws.AnyPrices(m);
    const SimReport sim = Simulate(m, p, 1000000, 1000 + k, DefaultThreads());
    const Comparison c =
        Compare(sim, Demand(Firm::kX, p, m), Demand(Firm::kY, p, m),
                Surplus(p, m).consumer_surplus);
    worst = std::max(worst, c.max_abs_z);
    if (!c.pass) ++failed;
  }
  out.detail << "markets=50 max|z|=" << worst << " failing=" << failed;
  out.Require(failed == 0, "all |z| <= 4");
}

void Oligopoly(Outcome& out) {
  const Distribution u = Distribution::Uniform();
  const double p2 = OligopolySolve(2, u, 0.0, 0.1).price;
  const double p3 = OligopolySolve(3, u, 0.0, 0.1).price;
  out.detail << "s=0.1: n=2 " << p2 << " n=3 " << p3;
  out.Require(p3 < p2, "n=3 below n=2");
  double last = 1.0;
  int switching = 0;
  for (double s : Linspace(0.02, 0.4, 20)) {
    const double p = OligopolySolve(3, u, 0.0, s).price;
    if (s >= 1.0 - p) break;
    ++switching;
    out.Require(p < last, "n=3 decreasing in s");
    last = p;
  }
  out.detail << " n=3 switching points=" << switching;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

int Run() {
  const std::vector<Criterion> criteria = {
      {1, "figure-1 demand", 5, Figure1},
      {2, "statics in s", 30, Theorem1},
      {3, "zero-cost discontinuity", 10, ZeroCost},
      {4, "large-s limit", 2, LargeS},
      {5, "hotelling identities", 1, Hotelling},
      {6, "unknown valuations, step density", 60, Unknown},
      {7, "derivative consistency", 60, Derivatives},
      {8, "price sensitivity", 30, Sensitivity},
      {9, "monotonicity", 60, Monotone},
      {10, "incumbent", 2, Incumbent},
      {11, "simulation vs quadrature", 300, OracleEquivalence},
      {12, "oligopoly direction", 30, Oligopoly},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    out.detail.precision(8);
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.Require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (seconds > c.budget_seconds) out.Require(false, "time budget");
    const bool known = kKnownDeviations.count(c.id) > 0;
    if (!out.pass && !known) ++unexpected;
    std::printf("%s %2d %-34s %7.2fs  %s%s\n", out.pass ? "PASS" : "FAIL",
                c.id, c.name, seconds, out.detail.str().c_str(),
                !out.pass && known ? " (known deviation)" : "");
  }
  std::printf("unexpected failures: %d\n", unexpected);
  return unexpected;
}

}  // namespace
}  // namespace searchduo

int main() { return searchduo::Run(); }
