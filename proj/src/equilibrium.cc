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


#include "searchduo/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "searchduo/firm.h"
#include "searchduo/format.h"
#include "searchduo/parallel.h"

namespace searchduo {
namespace {

using Point = std::array<double, 2>;

constexpr double kBoundaryEps = 1e-9;

double Cost(const MarketParams& m, int k) {
  return k == 0 ? m.x.cost : m.y.cost;
}

Point Residual(const MarketParams& m, const Point& p) {
  return {FocStar(Firm::kX, p[0], p[1], m), FocStar(Firm::kY, p[0], p[1], m)};
}

// Step for finite differences of FocStar: the unknown-valuation condition is
// itself a numeric derivative, so it needs a wider stencil.
double JacobianStep(const MarketParams& m) {
  return m.variant == Variant::kUnknown ? 1e-4 : 1e-6;
}

// J[r][c] = d FocStar_r / d p_c, central differences kept inside [c_i, 1].
std::array<Point, 2> Jacobian(const MarketParams& m, const Point& p) {
  const double h = JacobianStep(m);
  std::array<Point, 2> jac{};
  for (int col = 0; col < 2; ++col) {
    Point up = p;
    Point down = p;
    up[col] = std::min(1.0, p[col] + h);
    down[col] = std::max(Cost(m, col), p[col] - h);
    const Point ru = Residual(m, up);
    const Point rd = Residual(m, down);
    for (int row = 0; row < 2; ++row) {
      jac[row][col] = (ru[row] - rd[row]) / (up[col] - down[col]);
    }
  }
  return jac;
}

bool AtBound(const MarketParams& m, const Point& p, int k) {
  return p[k] <= Cost(m, k) + kBoundaryEps || p[k] >= 1.0 - kBoundaryEps;
}

// Solves J x = b restricted to the coordinates flagged in `free`.
Point SolveRestricted(const std::array<Point, 2>& jac, const Point& b,
                      const std::array<bool, 2>& free) {
  Point x{0.0, 0.0};
  if (free[0] && free[1]) {
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    if (det == 0.0) return x;
    x[0] = (b[0] * jac[1][1] - jac[0][1] * b[1]) / det;
    x[1] = (jac[0][0] * b[1] - jac[1][0] * b[0]) / det;
  } else {
    for (int k = 0; k < 2; ++k) {
      if (free[k] && jac[k][k] != 0.0) x[k] = b[k] / jac[k][k];
    }
  }
  return x;
}

double MaxAbs(const Point& r) { return std::max(std::abs(r[0]), std::abs(r[1])); }

Point NewtonPolish(const MarketParams& m, Point p) {
  const std::array<bool, 2> free{!AtBound(m, p, 0), !AtBound(m, p, 1)};
  if (!free[0] && !free[1]) return p;
  Point r = Residual(m, p);
  for (int it = 0; it < 20 && MaxAbs(r) > 1e-14; ++it) {
    const Point step = SolveRestricted(Jacobian(m, p), r, free);
    double scale = 1.0;
    Point next;
    for (int damp = 0; damp < 30; ++damp) {
      next = {p[0] - scale * step[0], p[1] - scale * step[1]};
      if (next[0] >= Cost(m, 0) && next[0] <= 1.0 && next[1] >= Cost(m, 1) &&
          next[1] <= 1.0) {
        break;
      }
      scale *= 0.5;
    }
    next[0] = std::clamp(next[0], Cost(m, 0), 1.0);
    next[1] = std::clamp(next[1], Cost(m, 1), 1.0);
    const Point rn = Residual(m, next);
    if (!(MaxAbs(rn) < MaxAbs(r))) break;
    p = next;
    r = rn;
  }
  return p;
}

struct Limit {
  Point p;
  int iterations;
};

Limit Iterate(const MarketParams& m, Point p, const SolveOptions& options) {
  std::deque<Point> tail;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Point next{
        ConsistentBestResponse(Firm::kX, p[1], m, options.bracket_points),
        ConsistentBestResponse(Firm::kY, p[0], m, options.bracket_points)};
    const double moved =
        std::max(std::abs(next[0] - p[0]), std::abs(next[1] - p[1]));
    p = next;
    tail.push_back(p);
    if (tail.size() > 10) tail.pop_front();
    if (moved < options.tolerance) return {p, it};
  }
  std::ostringstream os;
  os << "best-response iteration did not converge in "
     << options.max_iterations << " rounds; last prices (" << FormatNumber(p[0])
     << ", " << FormatNumber(p[1]) << ")";
  throw SolverError(os.str(), {tail.begin(), tail.end()});
}

EquilibriumResult Fill(const MarketParams& m, const Point& p, int iterations,
                       const SolveOptions& options) {
  EquilibriumResult r;
  r.p_x = p[0];
  r.p_y = p[1];
  const PriceProfile prices = PriceProfile::Pure(p[0], p[1]);
  r.demand_x = Demand(Firm::kX, prices, m);
  r.demand_y = Demand(Firm::kY, prices, m);
  r.profit_x = (p[0] - m.x.cost) * r.demand_x.total();
  r.profit_y = (p[1] - m.y.cost) * r.demand_y.total();
  const Point res = Residual(m, p);
  r.foc_x = res[0];
  r.foc_y = res[1];
  r.iterations = iterations;
  r.multiplicity = AtBound(m, p, 0) || AtBound(m, p, 1)
                       ? Multiplicity::kBoundary
                       : Multiplicity::kUniqueFound;
  if (options.diagnostics) {
    Stability(r, m);
    PriceSensitivity(r, m);
  }
  return r;
}

}  // namespace

const char* MultiplicityName(Multiplicity m) {
  switch (m) {
    case Multiplicity::kUniqueFound:
      return "unique-found";
    case Multiplicity::kMultipleFound:
      return "multiple-found";
    case Multiplicity::kBoundary:
      return "boundary";
  }
  return "?";
}

double ConsistentBestResponse(Firm i, double rival_price,
                              const MarketParams& market,
                              int bracket_points) {
  const double c = market.firm(i).cost;
  auto g = [&](double p) {
    return i == Firm::kX ? FocStar(Firm::kX, p, rival_price, market)
                         : FocStar(Firm::kY, rival_price, p, market);
  };
  if (g(1.0) >= 0.0) return 1.0;
  const int n = std::max(bracket_points, 2);
  std::vector<double> grid(n);
  std::vector<double> value(n);
  for (int k = 0; k < n; ++k) {
    grid[k] = k + 1 == n ? 1.0 : c + (1.0 - c) * k / (n - 1.0);
    value[k] = g(grid[k]);
  }
  for (int k = n - 2; k >= 0; --k) {
    if (value[k] > 0.0 && value[k + 1] <= 0.0) {
      if (value[k + 1] == 0.0) return grid[k + 1];
      boost::uintmax_t max_iter = 200;
      const auto bracket = boost::math::tools::toms748_solve(
          g, grid[k], grid[k + 1], value[k], value[k + 1],
          boost::math::tools::eps_tolerance<double>(50), max_iter);
      return 0.5 * (bracket.first + bracket.second);
    }
  }
  return c;
}

std::vector<EquilibriumResult> Solve(const MarketParams& market,
                                     const SolveOptions& options) {
  market.Validate();
  const Limit low = Iterate(market, {market.x.cost, market.y.cost}, options);
  const Limit high = Iterate(market, {1.0, 1.0}, options);
  const Point p_low = NewtonPolish(market, low.p);
  const Point p_high = NewtonPolish(market, high.p);
  const double gap = std::max(std::abs(p_low[0] - p_high[0]),
                              std::abs(p_low[1] - p_high[1]));
  if (gap > options.distinct) {
    std::vector<EquilibriumResult> out{
        Fill(market, p_low, low.iterations, options),
        Fill(market, p_high, high.iterations, options)};
    for (EquilibriumResult& r : out) {
      r.multiplicity = Multiplicity::kMultipleFound;
    }
    return out;
  }
  return {Fill(market, p_high, std::max(low.iterations, high.iterations),
               options)};
}

EquilibriumResult SolveHighest(const MarketParams& market,
                               const SolveOptions& options) {
  return Solve(market, options).back();
}

void Stability(EquilibriumResult& result, const MarketParams& market) {
  constexpr double h = 1e-4;
  auto slope = [&](Firm i) {
    const Firm j = Rival(i);
    const double own = result.price(i);
    const double rival = result.price(j);
    const double up = std::min(1.0, rival + h);
    const double down = std::max(market.firm(j).cost, rival - h);
    auto br = [&](double p_j) {
      return FindBestResponse(i, p_j, own, p_j, market).price;
    };
    return (br(up) - br(down)) / (up - down);
  };
  result.br_slope_x = slope(Firm::kX);
  result.br_slope_y = slope(Firm::kY);
  result.br_slope_product = result.br_slope_x * result.br_slope_y;
  result.stable = std::abs(result.br_slope_product) < 1.0;
}

void PriceSensitivity(EquilibriumResult& result, const MarketParams& market) {
  const Point p{result.p_x, result.p_y};
  const std::array<bool, 2> free{!AtBound(market, p, 0),
                                 !AtBound(market, p, 1)};
  const Point b{DfocDs(Firm::kX, p[0], p[1], market),
                DfocDs(Firm::kY, p[0], p[1], market)};
  const Point x = SolveRestricted(Jacobian(market, p), b, free);
  result.dp_ds_x = -x[0];
  result.dp_ds_y = -x[1];
}

std::array<double, 2> ResolveSensitivity(const MarketParams& market,
                                         double h) {
  SolveOptions quiet;
  quiet.diagnostics = false;
  MarketParams up = market;
  MarketParams down = market;
  up.s = market.s + h;
  down.s = std::max(0.0, market.s - h);
  const EquilibriumResult a = SolveHighest(up, quiet);
  const EquilibriumResult b = SolveHighest(down, quiet);
  const double width = up.s - down.s;
  return {(a.p_x - b.p_x) / width, (a.p_y - b.p_y) / width};
}

const char* SweepParamName(SweepParam p) {
  switch (p) {
    case SweepParam::kS:
      return "s";
    case SweepParam::kCostX:
      return "cX";
    case SweepParam::kCostY:
      return "cY";
    case SweepParam::kMuX:
      return "muX";
  }
  return "?";
}

MarketParams WithParam(MarketParams market, SweepParam param, double value) {
  switch (param) {
    case SweepParam::kS:
      market.s = value;
      break;
    case SweepParam::kCostX:
      market.x.cost = value;
      break;
    case SweepParam::kCostY:
      market.y.cost = value;
      break;
    case SweepParam::kMuX:
      market.x.mu = value;
      market.y.mu = 1.0 - value;
      break;
  }
  return market;
}

std::vector<SweepRow> Sweep(const MarketParams& market, SweepParam param,
                            const std::vector<double>& grid, int threads,
                            const SolveOptions& options) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("sweep grid must be sorted");
  }
  SolveOptions quiet = options;
  quiet.diagnostics = false;
  std::vector<SweepRow> rows(grid.size());
  ParallelFor(static_cast<int>(grid.size()), threads, [&](int k) {
    const MarketParams m = WithParam(market, param, grid[k]);
    const EquilibriumResult r = SolveHighest(m, quiet);
    const SurplusReport sr = Surplus(PriceProfile::Pure(r.p_x, r.p_y), m);
    SweepRow& row = rows[k];
    row.value = grid[k];
    row.p_x = r.p_x;
    row.p_y = r.p_y;
    row.profit_x = sr.profit_x;
    row.profit_y = sr.profit_y;
    row.consumer_surplus = sr.consumer_surplus;
    row.total_surplus = sr.total_surplus;
    row.exit_mass = sr.exit_mass;
    row.search_mass = sr.search_mass;
    row.switch_share_x = sr.switch_share_x;
    row.switch_share_y = sr.switch_share_y;
  });
  return rows;
}

double MonopolyPrice(const Distribution& dist, double c) {
  if (!(c >= 0.0 && c < 1.0)) {
    throw std::invalid_argument("monopoly cost must lie in [0, 1)");
  }
  auto profit = [&](double p) { return (p - c) * (1.0 - dist.Cdf(p)); };
  constexpr int n = 200;
  double best_p = c;
  double best = profit(c);
  for (int k = 1; k < n; ++k) {
    const double p = k + 1 == n ? 1.0 : c + (1.0 - c) * k / (n - 1.0);
    if (profit(p) > best) {
      best = profit(p);
      best_p = p;
    }
  }
  const double step = (1.0 - c) / (n - 1.0);
  const double lo = std::max(c, best_p - step);
  const double hi = std::min(1.0, best_p + step);
  const auto brent = boost::math::tools::brent_find_minima(
      [&](double p) { return -profit(p); }, lo, hi, 52);
  double p = brent.first;

  // Brent stalls near sqrt(eps) in x; the sign of the marginal profit pins
  // the maximizer down to rounding.
  auto marginal = [&](double q) {
    return 1.0 - dist.Cdf(q) - (q - c) * dist.Pdf(q);
  };
  double a = std::max(c, p - 1e-6);
  double b = std::min(1.0, p + 1e-6);
  if (marginal(a) > 0.0 && marginal(b) <= 0.0) {
    while (true) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (marginal(mid) > 0.0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    p = 0.5 * (a + b);
  }
  return profit(p) >= best ? p : best_p;
}

}  // namespace searchduo
