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

#include "searchduo/demand.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "searchduo/format.h"
#include "searchduo/quadrature.h"

namespace searchduo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int (1 - F_i(a + max(0, v - b))) dF_j(v) over [lo, hi].
double SurvivalIntegral(const Distribution& own, const Distribution& rival,
                        double a, double b, double lo = 0.0, double hi = 1.0) {
  return ShiftedIntegral(
      rival, [&](double x) { return 1.0 - own.Cdf(x); }, own.Knots(), a, b,
      lo, hi);
}

// Expected utility of a known-valuation consumer at `home` whose valuation at
// the rival is y, averaged over her home valuation.
double KnownSurplusGivenRival(const Distribution& home_law, double p_home,
                              double p_other, double ce_other, double s,
                              double y) {
  const double gain = y - ce_other - s;
  if (gain < 0.0) return home_law.ExpectedExcess(p_home);
  const double reach = p_home + gain;
  const double other_net = std::max(0.0, y - p_other);
  if (other_net <= gain) {
    // Searchers and non-searchers alike end with max{other_net, v - p_home}.
    return other_net + home_law.ExpectedExcess(p_home + other_net) -
           s * home_law.Cdf(reach);
  }
  return home_law.ExpectedExcess(reach) +
         gain * (1.0 - home_law.Cdf(reach)) +
         (other_net - s) * home_law.Cdf(reach);
}

double KnownPopulationSurplus(const FirmParams& home, const FirmParams& other,
                              double p_home, double p_other, double ce_other,
                              double s) {
  std::vector<double> cuts = other.dist.Knots();
  cuts.push_back(ce_other + s);
  cuts.push_back(p_other);
  for (double t : home.dist.Knots()) {
    cuts.push_back(t - p_home + ce_other + s);
    cuts.push_back(t - p_home + p_other);
  }
  return IntegrateSplit(
      [&](double y) {
        return KnownSurplusGivenRival(home.dist, p_home, p_other, ce_other, s,
                                      y) *
               other.dist.Pdf(y);
      },
      0.0, 1.0, std::move(cuts));
}

// E over home valuation x of [u + 1{searches}(E(y - p_other - u)^+ - s)],
// u = max(0, x - p_home).
double UnknownPopulationSurplus(const FirmParams& home,
                                const FirmParams& other, double p_home,
                                double p_other, double reach, double s) {
  double total = home.dist.ExpectedExcess(p_home);
  if (reach < 0.0) return total;
  const double top = std::min(1.0, p_home + reach);
  total += ShiftedIntegral(
      home.dist,
      [&](double z) { return other.dist.ExpectedExcess(z); },
      other.dist.Knots(), p_other, p_home, 0.0, top);
  total -= s * home.dist.Cdf(top);
  return total;
}

}  // namespace

DemandBreakdown DemandKnown(Firm i, const PriceProfile& prices,
                            const MarketParams& market) {
  const Firm j = Rival(i);
  const FirmParams& own = market.firm(i);
  const FirmParams& rival = market.firm(j);
  const double s = market.s;
  const double p_i = prices.posted(i);
  const double p_j = prices.posted(j);
  const double ce_i = prices.expected(i);
  const double ce_j = prices.expected(j);

  // Rival valuation above which home consumers search.
  const double search_from = ce_j + s;
  const double stay_cut = std::max(search_from, p_j);
  const double switch_floor = std::max(p_i, ce_i + s);

  DemandBreakdown d;
  const double loyal =
      own.mu * SurvivalIntegral(own.dist, rival.dist, p_i, stay_cut);
  d.loyal_no_search =
      own.mu * SurvivalIntegral(own.dist, rival.dist, p_i, search_from);
  d.loyal_after_search = std::max(0.0, loyal - d.loyal_no_search);
  d.switchers_in =
      rival.mu * SurvivalIntegral(own.dist, rival.dist, switch_floor, p_j);
  d.exit_mass =
      own.mu * own.dist.Cdf(p_i) * rival.dist.Cdf(std::max(p_j, search_from));
  d.search_mass =
      own.mu * ShiftedIntegral(
                   rival.dist, [&](double x) { return own.dist.Cdf(x); },
                   own.dist.Knots(), p_i, search_from, search_from, 1.0);
  return d;
}

double DemandFullInfo(Firm i, double p_x, double p_y,
                      const MarketParams& market) {
  const Firm j = Rival(i);
  const double p_i = i == Firm::kX ? p_x : p_y;
  const double p_j = i == Firm::kX ? p_y : p_x;
  return SurvivalIntegral(market.firm(i).dist, market.firm(j).dist, p_i, p_j);
}

DemandBreakdown DemandFullInfoBreakdown(Firm i, double p_x, double p_y,
                                        const MarketParams& market) {
  const Firm j = Rival(i);
  const FirmParams& own = market.firm(i);
  const FirmParams& rival = market.firm(j);
  const double p_i = i == Firm::kX ? p_x : p_y;
  const double p_j = i == Firm::kX ? p_y : p_x;
  const double share_i = DemandFullInfo(i, p_x, p_y, market);
  const double share_j = DemandFullInfo(j, p_x, p_y, market);
  DemandBreakdown d;
  d.loyal_no_search = own.mu * share_i;
  d.switchers_in = rival.mu * share_i;
  d.exit_mass = own.mu * own.dist.Cdf(p_i) * rival.dist.Cdf(p_j);
  d.search_mass = own.mu * share_j;
  return d;
}

double UnknownSearchReach(const Distribution& rival_law, double rival_ce,
                          double s) {
  if (s <= 0.0) return kInf;
  // Search iff E(t - x)^+ >= s with x = ce + max{0, v_home - p_home}.
  const double mean = rival_law.Mean();
  double cut;
  if (s >= mean) {
    cut = mean - s;
  } else {
    double lo = 0.0;
    double hi = 1.0;
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (rival_law.ExpectedExcess(mid) >= s) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    cut = lo;
  }
  return cut - rival_ce;
}

DemandBreakdown DemandUnknown(Firm i, const PriceProfile& prices,
                              const MarketParams& market) {
  const Firm j = Rival(i);
  const FirmParams& own = market.firm(i);
  const FirmParams& rival = market.firm(j);
  const double s = market.s;
  const double p_i = prices.posted(i);
  const double p_j = prices.posted(j);
  const double home_reach =
      UnknownSearchReach(rival.dist, prices.expected(j), s);
  const double away_reach = UnknownSearchReach(own.dist, prices.expected(i), s);

  DemandBreakdown d;
  if (home_reach >= 0.0) {
    const double top = std::min(1.0, p_i + home_reach);
    d.loyal_no_search = own.mu * (1.0 - own.dist.Cdf(p_i + home_reach));
    d.loyal_after_search =
        own.mu * ShiftedIntegral(
                     own.dist, [&](double x) { return rival.dist.Cdf(x); },
                     rival.dist.Knots(), p_j, p_i, p_i, top);
    d.exit_mass = own.mu * own.dist.Cdf(p_i) * rival.dist.Cdf(p_j);
    d.search_mass = own.mu * own.dist.Cdf(top);
  } else {
    d.loyal_no_search = own.mu * (1.0 - own.dist.Cdf(p_i));
    d.exit_mass = own.mu * own.dist.Cdf(p_i);
  }
  if (away_reach >= 0.0) {
    const double top = std::min(1.0, p_j + away_reach);
    d.switchers_in = rival.mu * SurvivalIntegral(own.dist, rival.dist, p_i,
                                                 p_j, 0.0, top);
  }
  return d;
}

DemandBreakdown Demand(Firm i, const PriceProfile& prices,
                       const MarketParams& market) {
  switch (market.variant) {
    case Variant::kKnown:
      return DemandKnown(i, prices, market);
    case Variant::kUnknown:
      return DemandUnknown(i, prices, market);
    case Variant::kFullInformation:
      return DemandFullInfoBreakdown(i, prices.p_x, prices.p_y, market);
  }
  return {};
}

SurplusReport Surplus(const PriceProfile& prices, const MarketParams& market) {
  const DemandBreakdown dx = Demand(Firm::kX, prices, market);
  const DemandBreakdown dy = Demand(Firm::kY, prices, market);
  const double s = market.s;

  SurplusReport r;
  switch (market.variant) {
    case Variant::kKnown:
      r.consumer_surplus =
          market.x.mu * KnownPopulationSurplus(market.x, market.y, prices.p_x,
                                               prices.p_y, prices.ce_y, s) +
          market.y.mu * KnownPopulationSurplus(market.y, market.x, prices.p_y,
                                               prices.p_x, prices.ce_x, s);
      break;
    case Variant::kUnknown:
      r.consumer_surplus =
          market.x.mu *
              UnknownPopulationSurplus(
                  market.x, market.y, prices.p_x, prices.p_y,
                  UnknownSearchReach(market.y.dist, prices.ce_y, s), s) +
          market.y.mu *
              UnknownPopulationSurplus(
                  market.y, market.x, prices.p_y, prices.p_x,
                  UnknownSearchReach(market.x.dist, prices.ce_x, s), s);
      break;
    case Variant::kFullInformation:
      // Everyone compares both offers at no cost.
      r.consumer_surplus = UnknownPopulationSurplus(
          market.x, market.y, prices.p_x, prices.p_y, kInf, 0.0);
      break;
  }
  r.profit_x = (prices.p_x - market.x.cost) * dx.total();
  r.profit_y = (prices.p_y - market.y.cost) * dy.total();
  r.total_surplus = r.consumer_surplus + r.profit_x + r.profit_y;
  r.exit_mass = dx.exit_mass + dy.exit_mass;
  r.search_mass = dx.search_mass + dy.search_mass;
  r.switch_share_x = dx.total() > 0.0 ? dx.switchers_in / dx.total() : 0.0;
  r.switch_share_y = dy.total() > 0.0 ? dy.switchers_in / dy.total() : 0.0;
  return r;
}

RegionGrid RegionMap(const PriceProfile& prices, const MarketParams& market,
                     Firm home, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
  RegionGrid grid;
  grid.n = grid_n;
  grid.home = home;
  grid.cells.resize(static_cast<std::size_t>(grid_n) * grid_n);
  for (int iy = 0; iy < grid_n; ++iy) {
    for (int ix = 0; ix < grid_n; ++ix) {
      const double vx = grid.center(ix);
      const double vy = grid.center(iy);
      const Valuations v = home == Firm::kX ? Valuations{vx, vy}
                                            : Valuations{vy, vx};
      grid.cells[iy * grid_n + ix] = Decide(v, home, prices, market);
    }
  }
  return grid;
}

void WriteRegionCsv(const RegionGrid& grid, std::ostream& out) {
  out << "vx,vy,outcome\n";
  for (int iy = 0; iy < grid.n; ++iy) {
    for (int ix = 0; ix < grid.n; ++ix) {
      out << FormatNumber(grid.center(ix)) << ','
          << FormatNumber(grid.center(iy)) << ','
          << OutcomeName(grid.at(ix, iy)) << '\n';
    }
  }
}

namespace {

const char* OutcomeColor(ConsumerOutcome o) {
  switch (o) {
    case ConsumerOutcome::kBuyHomeNoSearch:
      return "#f28e2b";
    case ConsumerOutcome::kExitNoSearch:
      return "#e0e0e0";
    case ConsumerOutcome::kSearchBuyHome:
      return "#edc948";
    case ConsumerOutcome::kSearchSwitch:
      return "#4e79a7";
    case ConsumerOutcome::kSearchExit:
      return "#9c9c9c";
  }
  return "#000000";
}

}  // namespace

void WriteRegionSvg(const RegionGrid& grid, std::ostream& out) {
  constexpr int kSize = 512;
  constexpr int kLegend = 200;
  const double cell = static_cast<double>(kSize) / grid.n;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << kSize + kLegend << "\" height=\"" << kSize << "\">\n";
  for (int iy = 0; iy < grid.n; ++iy) {
    int run_start = 0;
    for (int ix = 1; ix <= grid.n; ++ix) {
      if (ix < grid.n && grid.at(ix, iy) == grid.at(run_start, iy)) continue;
      out << "<rect x=\"" << FormatNumber(run_start * cell) << "\" y=\""
          << FormatNumber((grid.n - 1 - iy) * cell) << "\" width=\""
          << FormatNumber((ix - run_start) * cell) << "\" height=\""
          << FormatNumber(cell) << "\" fill=\""
          << OutcomeColor(grid.at(run_start, iy)) << "\"/>\n";
      run_start = ix;
    }
  }
  for (int k = 0; k < kNumOutcomes; ++k) {
    const auto o = static_cast<ConsumerOutcome>(k);
    const int y = 20 + 24 * k;
    out << "<rect x=\"" << kSize + 10 << "\" y=\"" << y
        << "\" width=\"16\" height=\"16\" fill=\"" << OutcomeColor(o)
        << "\"/>\n<text x=\"" << kSize + 32 << "\" y=\"" << y + 13
        << "\" font-size=\"12\">" << OutcomeName(o) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace searchduo
