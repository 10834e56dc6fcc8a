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


#include "searchduo/conditions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace searchduo {
namespace {

constexpr double kSlackTolerance = 1e-12;

std::vector<double> Grid(double lo, double hi, int n) {
  n = std::max(n, 2);
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) {
    out[k] = k + 1 == n ? hi : lo + (hi - lo) * k / (n - 1.0);
  }
  return out;
}

// Smallest of fn over the one-sided density values at x that lie inside the
// support.
template <class Fn>
double WorstSide(const Distribution& d, double x, Fn&& fn) {
  double worst = std::numeric_limits<double>::infinity();
  if (x > 0.0) worst = std::min(worst, fn(d.PdfLeft(x), d.PdfSlope(x)));
  if (x < 1.0) worst = std::min(worst, fn(d.PdfRight(x), d.PdfSlope(x)));
  return worst;
}

bool InSupport(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

Lemma1Report CheckLemma1(const Distribution& dist, double c,
                         int grid_points) {
  Lemma1Report r;
  r.worst_slack = std::numeric_limits<double>::infinity();
  const std::vector<double> prices = Grid(c, 1.0, grid_points);
  std::vector<double> ws = Grid(0.0, 1.0, grid_points);
  const std::vector<double> knots = dist.Knots();
  for (double p : prices) {
    std::vector<double> local = ws;
    for (double t : knots) {
      if (InSupport(t - p)) local.push_back(t - p);
    }
    for (double w : local) {
      const double x = p + w;
      if (!InSupport(x)) continue;
      const double slack = WorstSide(dist, x, [&](double f, double df) {
        return (p - c) * df + f;
      });
      if (slack < r.worst_slack) {
        r.worst_slack = slack;
        r.worst_price = p;
        r.worst_w = w;
      }
    }
  }
  r.holds = r.worst_slack >= -kSlackTolerance;
  return r;
}

Lemma2Report CheckLemma2(const MarketParams& market, int grid_points) {
  Lemma2Report r;
  const double gap = market.x.mu - market.y.mu;
  if (std::abs(gap) > 1e-12) {
    r.equal_shares = {false, "X", market.x.mu, gap};
  }
  for (Firm f : {Firm::kX, Firm::kY}) {
    const FirmParams& firm = market.firm(f);
    const Distribution& d = firm.dist;
    // Density must not rise anywhere inside the support.
    for (double x : Grid(0.0, 1.0, grid_points)) {
      const double slope = d.PdfSlope(x);
      if (slope > kSlackTolerance && r.nonincreasing_density.holds) {
        r.nonincreasing_density = {false, FirmName(f), x, slope};
      }
    }
    for (const DensityJump& jump : d.Jumps()) {
      if (jump.at <= 0.0 || jump.at >= 1.0) continue;
      if (jump.size > 0.0 && r.nonincreasing_density.holds) {
        r.nonincreasing_density = {false, FirmName(f), jump.at, jump.size};
      }
    }
    std::vector<double> points = Grid(firm.cost, 1.0, grid_points);
    for (double t : d.Knots()) {
      if (t >= firm.cost) points.push_back(t);
    }
    for (double p : points) {
      const double slack = WorstSide(d, p, [&](double f, double df) {
        return (p - firm.cost) * df + 2.0 * f;
      });
      if (slack < -kSlackTolerance && r.bounded_elasticity.holds) {
        r.bounded_elasticity = {false, FirmName(f), p, slack};
      }
    }
  }
  return r;
}

Thm1Report CheckThm1(const MarketParams& market, const PriceProfile& prices,
                     int grid_points) {
  const double s = market.s;
  if (!(s > 0.0)) {
    throw std::invalid_argument("CheckThm1 needs a positive search cost");
  }
  Thm1Report r;
  if (s >= 1.0) {
    r.no_search_regime = true;
    return r;
  }
  const bool uniform = market.x.dist.kind() == DistKind::kUniform &&
                       market.y.dist.kind() == DistKind::kUniform;
  for (Firm i : {Firm::kX, Firm::kY}) {
    const Firm j = Rival(i);
    const FirmParams& own = market.firm(i);
    const double mu_j = market.firm(j).mu;
    const double p_i = prices.posted(i);
    Thm1FirmReport& out = i == Firm::kX ? r.x : r.y;
    out.worst_slack = std::numeric_limits<double>::infinity();
    for (double w : Grid(0.0, 1.0 - s, grid_points)) {
      const double lo = p_i - s + w;
      // rhs minus lhs, with the lhs density taken from its worse side.
      const double rhs = mu_j * own.dist.Pdf(p_i + s + w);
      const double lhs = std::max(
          own.mu * own.dist.PdfLeft(lo) +
              own.mu * (p_i - own.cost) * own.dist.PdfSlope(lo),
          own.mu * own.dist.PdfRight(lo) +
              own.mu * (p_i - own.cost) * own.dist.PdfSlope(lo));
      const double slack = rhs - lhs;
      if (slack < out.worst_slack) {
        out.worst_slack = slack;
        out.worst_w = w;
      }
    }
    out.pointwise_holds = out.worst_slack >= -kSlackTolerance;
    if (uniform) {
      const double p_j = prices.posted(j);
      out.has_uniform_form = true;
      out.uniform_lhs = own.mu * (1.0 - p_j - s);
      out.uniform_rhs = mu_j * (1.0 - p_j);
      out.uniform_holds = out.uniform_lhs <= out.uniform_rhs + kSlackTolerance;
    }
  }
  return r;
}

}  // namespace searchduo
