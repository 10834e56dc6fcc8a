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

#include "searchduo/firm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "searchduo/demand.h"
#include "searchduo/quadrature.h"

namespace searchduo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRichardsonStep = 1e-6;

// Shorthands for one firm facing one rival in valuation space.
struct Pair {
  const FirmParams& own;
  const FirmParams& rival;

  // int f_i(a + max(0, v - b)) dF_j(v) over [lo, 1].
  double DensityAt(double a, double b, double lo = 0.0) const {
    return ShiftedIntegral(
        rival.dist, [&](double x) { return own.dist.Pdf(x); },
        own.dist.Knots(), a, b, lo, 1.0);
  }
  // d/da of DensityAt(a, b, b): the part where the argument moves.
  double SlopeAbove(double a, double b) const {
    return DensitySlopeIntegral(rival.dist, own.dist, a, b, b, 1.0);
  }
  // d/da of DensityAt(a, b).
  double Slope(double a, double b) const {
    return own.dist.PdfSlope(a) * rival.dist.Cdf(b) + SlopeAbove(a, b);
  }
};

bool HoldsUp(Firm i, const PriceProfile& prices, const MarketParams& market) {
  return prices.posted(i) > prices.expected(i) + market.s;
}

double KnownFoc(Firm i, const PriceProfile& prices,
                const MarketParams& market) {
  const Firm j = Rival(i);
  const Pair pair{market.firm(i), market.firm(j)};
  const double p_i = prices.posted(i);
  const double stay_cut =
      std::max(prices.expected(j) + market.s, prices.posted(j));
  double slope = -pair.own.mu * pair.DensityAt(p_i, stay_cut);
  if (HoldsUp(i, prices, market)) {
    slope -= pair.rival.mu * pair.DensityAt(p_i, prices.posted(j));
  }
  const double demand = DemandKnown(i, prices, market).total();
  return demand + (p_i - pair.own.cost) * slope;
}

double FullInfoFoc(Firm i, double p_x, double p_y,
                   const MarketParams& market) {
  const Firm j = Rival(i);
  const Pair pair{market.firm(i), market.firm(j)};
  const double p_i = i == Firm::kX ? p_x : p_y;
  const double p_j = i == Firm::kX ? p_y : p_x;
  return DemandFullInfo(i, p_x, p_y, market) -
         (p_i - pair.own.cost) * pair.DensityAt(p_i, p_j);
}

double NumericFoc(Firm i, const PriceProfile& prices,
                  const MarketParams& market) {
  const double p = prices.posted(i);
  auto profit_at = [&](double q) {
    PriceProfile moved = prices;
    moved.posted(i) = q;
    return Profit(i, moved, market);
  };
  auto central = [&](double h) {
    return (profit_at(p + h) - profit_at(p - h)) / (2.0 * h);
  };
  return (4.0 * central(0.5 * kRichardsonStep) - central(kRichardsonStep)) /
         3.0;
}

void RequireKnown(const MarketParams& market, const char* what) {
  if (market.variant != Variant::kKnown) {
    throw std::invalid_argument(std::string(what) +
                                " is defined for known valuations only");
  }
}

NetValueLaw DuopolyRival(const MarketParams& market, Firm j, double p_j) {
  return NetValueLaw({{market.firm(j).dist, p_j}});
}

}  // namespace

double Profit(Firm i, const PriceProfile& prices, const MarketParams& market) {
  return (prices.posted(i) - market.firm(i).cost) *
         Demand(i, prices, market).total();
}

double Foc(Firm i, const PriceProfile& prices, const MarketParams& market) {
  switch (market.variant) {
    case Variant::kKnown:
      return KnownFoc(i, prices, market);
    case Variant::kFullInformation:
      return FullInfoFoc(i, prices.p_x, prices.p_y, market);
    case Variant::kUnknown:
      return NumericFoc(i, prices, market);
  }
  return kNaN;
}

double Soc(Firm i, const PriceProfile& prices, const MarketParams& market) {
  RequireKnown(market, "Soc");
  const Firm j = Rival(i);
  const Pair pair{market.firm(i), market.firm(j)};
  const double p_i = prices.posted(i);
  const double stay_cut =
      std::max(prices.expected(j) + market.s, prices.posted(j));
  double slope = -pair.own.mu * pair.DensityAt(p_i, stay_cut);
  double curvature = -pair.own.mu * pair.Slope(p_i, stay_cut);
  if (HoldsUp(i, prices, market)) {
    slope -= pair.rival.mu * pair.DensityAt(p_i, prices.posted(j));
    curvature -= pair.rival.mu * pair.Slope(p_i, prices.posted(j));
  }
  return 2.0 * slope + (p_i - pair.own.cost) * curvature;
}

double CrossPartial(Firm i, const PriceProfile& prices,
                    const MarketParams& market) {
  RequireKnown(market, "CrossPartial");
  const Firm j = Rival(i);
  const Pair pair{market.firm(i), market.firm(j)};
  const double p_i = prices.posted(i);
  const double p_j = prices.posted(j);
  const double stay_cut = std::max(prices.expected(j) + market.s, p_j);
  const double switch_floor = std::max(p_i, prices.expected(i) + market.s);

  const double demand_shift =
      pair.own.mu * pair.DensityAt(p_i, stay_cut, stay_cut) +
      pair.rival.mu * pair.DensityAt(switch_floor, p_j, p_j);
  double slope_shift = pair.own.mu * pair.SlopeAbove(p_i, stay_cut);
  if (HoldsUp(i, prices, market)) {
    slope_shift += pair.rival.mu * pair.SlopeAbove(p_i, p_j);
  }
  return demand_shift + (p_i - pair.own.cost) * slope_shift;
}

double FocStarAgainst(const FirmParams& own, double rival_mu,
                      const NetValueLaw& rival, double price, double s) {
  const Distribution& f = own.dist;
  const std::vector<double> knots = f.Knots();
  auto survival = [&](double x) { return 1.0 - f.Cdf(x); };
  auto density = [&](double x) { return f.Pdf(x); };
  const double lo = rival.Lower();
  const double hi = rival.Upper();
  const double loyal =
      ShiftedIntegral(rival, survival, knots, price, s, lo, hi);
  const double switchers =
      ShiftedIntegral(rival, survival, knots, price + s, 0.0, lo, hi);
  const double marginal =
      ShiftedIntegral(rival, density, knots, price, s, lo, hi);
  return own.mu * loyal + rival_mu * switchers -
         (price - own.cost) * own.mu * marginal;
}

double DfocDsAgainst(const FirmParams& own, double rival_mu,
                     const NetValueLaw& rival, double price, double s) {
  const Distribution& f = own.dist;
  const std::vector<double> knots = f.Knots();
  auto density = [&](double x) { return f.Pdf(x); };
  const double hi = rival.Upper();
  const double lost_loyal =
      ShiftedIntegral(rival, density, knots, price, s, s, hi);
  const double lost_slope = DensitySlopeIntegral(rival, f, price, s, s, hi);
  const double switch_margin =
      ShiftedIntegral(rival, density, knots, price + s, 0.0, rival.Lower(), hi);
  return own.mu * (lost_loyal + (price - own.cost) * lost_slope) -
         rival_mu * switch_margin;
}

double FocStar(Firm i, double p_x, double p_y, const MarketParams& market) {
  const Firm j = Rival(i);
  const double p_i = i == Firm::kX ? p_x : p_y;
  const double p_j = i == Firm::kX ? p_y : p_x;
  switch (market.variant) {
    case Variant::kKnown:
      return FocStarAgainst(market.firm(i), market.firm(j).mu,
                            DuopolyRival(market, j, p_j), p_i, market.s);
    case Variant::kFullInformation:
      return FullInfoFoc(i, p_x, p_y, market);
    case Variant::kUnknown:
      return NumericFoc(i, PriceProfile::Pure(p_x, p_y), market);
  }
  return kNaN;
}

double DfocDs(Firm i, double p_x, double p_y, const MarketParams& market) {
  const Firm j = Rival(i);
  const double p_i = i == Firm::kX ? p_x : p_y;
  const double p_j = i == Firm::kX ? p_y : p_x;
  switch (market.variant) {
    case Variant::kKnown:
      return DfocDsAgainst(market.firm(i), market.firm(j).mu,
                           DuopolyRival(market, j, p_j), p_i, market.s);
    case Variant::kFullInformation:
      return 0.0;
    case Variant::kUnknown: {
      constexpr double h = 1e-4;
      MarketParams up = market;
      MarketParams down = market;
      up.s = market.s + h;
      down.s = std::max(0.0, market.s - h);
      return (FocStar(i, p_x, p_y, up) - FocStar(i, p_x, p_y, down)) /
             (up.s - down.s);
    }
  }
  return kNaN;
}

bool NearHoldupThreshold(Firm i, const PriceProfile& prices,
                         const MarketParams& market) {
  if (market.variant != Variant::kKnown) return false;
  return std::abs(prices.posted(i) - (prices.expected(i) + market.s)) < 1e-12;
}

FirmCalculusReport Calculus(Firm i, const PriceProfile& prices,
                            const MarketParams& market) {
  FirmCalculusReport r;
  r.profit = Profit(i, prices, market);
  r.foc = Foc(i, prices, market);
  const bool known = market.variant == Variant::kKnown;
  r.soc = known ? Soc(i, prices, market) : kNaN;
  r.cross_partial = known ? CrossPartial(i, prices, market) : kNaN;
  r.foc_star = FocStar(i, prices.p_x, prices.p_y, market);
  r.dfoc_ds = DfocDs(i, prices.p_x, prices.p_y, market);
  r.one_sided = NearHoldupThreshold(i, prices, market);
  return r;
}

BestResponse FindBestResponse(Firm i, double rival_price, double own_ce,
                              double rival_ce, const MarketParams& market,
                              int grid_points) {
  grid_points = std::max(grid_points, 3);
  const Firm j = Rival(i);
  const double c = market.firm(i).cost;
  PriceProfile prices;
  prices.posted(j) = rival_price;
  prices.expected(i) = own_ce;
  prices.expected(j) = rival_ce;
  auto at = [&](double p) {
    prices.posted(i) = p;
    return prices;
  };

  std::vector<double> grid(grid_points);
  std::vector<double> profit(grid_points);
  int best = 0;
  for (int k = 0; k < grid_points; ++k) {
    grid[k] = k + 1 == grid_points
                  ? 1.0
                  : c + (1.0 - c) * k / static_cast<double>(grid_points - 1);
    profit[k] = Profit(i, at(grid[k]), market);
    if (profit[k] > profit[best]) best = k;
  }

  BestResponse out;
  for (int k = 0; k < grid_points; ++k) {
    if (std::abs(k - best) > 1 && profit[k] >= profit[best] - 1e-9) {
      out.multiple_maxima = true;
    }
  }

  auto foc_at = [&](double p) { return Foc(i, at(p), market); };
  double lo = grid[std::max(best - 1, 0)];
  double hi = grid[std::min(best + 1, grid_points - 1)];
  double price = grid[best];
  // Shrink to a cell across which the first-order condition changes sign.
  if (!(foc_at(lo) > 0.0 && foc_at(hi) < 0.0)) {
    const double mid = grid[best];
    if (foc_at(lo) > 0.0 && foc_at(mid) <= 0.0) {
      hi = mid;
    } else if (foc_at(mid) > 0.0 && foc_at(hi) < 0.0) {
      lo = mid;
    } else {
      lo = hi = mid;
    }
  }
  if (hi > lo) {
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi || hi - lo < 1e-15) break;
      if (foc_at(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    price = 0.5 * (lo + hi);
  }
  out.price = price;
  out.profit = Profit(i, at(price), market);
  if (out.profit < profit[best]) {
    out.price = grid[best];
    out.profit = profit[best];
  }
  return out;
}

}  // namespace searchduo
