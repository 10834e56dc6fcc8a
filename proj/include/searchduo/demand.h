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

#ifndef SEARCHDUO_DEMAND_H_
#define SEARCHDUO_DEMAND_H_

#include <iosfwd>
#include <vector>

#include "searchduo/market.h"

namespace searchduo {

// Demand of one firm split by where its buyers come from. `exit_mass` and
// `search_mass` refer to the population initially at this firm, so for each
// firm i: loyal_i + switchers_in_j + exit_mass_i == mu_i.
struct DemandBreakdown {
  double loyal_no_search = 0.0;
  double loyal_after_search = 0.0;
  double switchers_in = 0.0;
  double exit_mass = 0.0;
  double search_mass = 0.0;

  double loyal() const { return loyal_no_search + loyal_after_search; }
  double total() const {
    return loyal_no_search + loyal_after_search + switchers_in;
  }
};

// Known valuations: exact demand of firm i at posted prices and consumers'
// expected prices.
DemandBreakdown DemandKnown(Firm i, const PriceProfile& prices,
                            const MarketParams& market);

// Both prices observed for free: mass of consumers whose net value at i is
// highest and nonnegative.
double DemandFullInfo(Firm i, double p_x, double p_y,
                      const MarketParams& market);
DemandBreakdown DemandFullInfoBreakdown(Firm i, double p_x, double p_y,
                                        const MarketParams& market);

// Valuation at the rival learned together with its price.
DemandBreakdown DemandUnknown(Firm i, const PriceProfile& prices,
                              const MarketParams& market);

// Dispatches on market.variant.
DemandBreakdown Demand(Firm i, const PriceProfile& prices,
                       const MarketParams& market);

// Search reach of a consumer who does not know her valuation at the rival:
// she searches iff max{0, v_home - p_home} <= reach. Returns +inf at s <= 0
// and a negative number when nobody searches.
double UnknownSearchReach(const Distribution& rival_law, double rival_ce,
                          double s);

struct SurplusReport {
  double consumer_surplus = 0.0;
  double profit_x = 0.0;
  double profit_y = 0.0;
  double total_surplus = 0.0;
  double exit_mass = 0.0;
  double search_mass = 0.0;
  double switch_share_x = 0.0;
  double switch_share_y = 0.0;
};

SurplusReport Surplus(const PriceProfile& prices, const MarketParams& market);

// Outcome of the consumers initially at `home`, classified at the centers of
// an n x n grid over (v_X, v_Y). Cell (ix, iy) is at index iy * n + ix.
struct RegionGrid {
  int n = 0;
  Firm home = Firm::kX;
  std::vector<ConsumerOutcome> cells;

  ConsumerOutcome at(int ix, int iy) const { return cells[iy * n + ix]; }
  double center(int k) const { return (k + 0.5) / n; }
};

// Throws std::invalid_argument for grid_n < 2.
RegionGrid RegionMap(const PriceProfile& prices, const MarketParams& market,
                     Firm home, int grid_n);

// Header `vx,vy,outcome`, rows ordered by vy then vx.
void WriteRegionCsv(const RegionGrid& grid, std::ostream& out);
// Flat-colored map, v_Y pointing up, fixed five-color legend.
void WriteRegionSvg(const RegionGrid& grid, std::ostream& out);

}  // namespace searchduo

#endif  // SEARCHDUO_DEMAND_H_
