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


#include "searchduo/variants.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

#include "searchduo/firm.h"

namespace searchduo {

HotellingResult HotellingPrices(double mu_x, double mu_y, double c_x,
                                double c_y, double s) {
  if (std::abs(mu_x + mu_y - 1.0) > 1e-12 || mu_x < 0.0 || mu_y < 0.0) {
    throw std::invalid_argument("shares must be nonnegative and sum to one");
  }
  if (!(s >= 0.0)) throw std::invalid_argument("s must be nonnegative");
  const double den = (1.0 + mu_x) * (1.0 + mu_y) - 1.0;
  auto price = [&](double mu_i, double mu_j, double c_i, double c_j) {
    return (mu_j * (mu_i - mu_j) * s + (1.0 + mu_j) * mu_i * c_i +
            mu_j * c_j) /
           den;
  };
  HotellingResult r;
  r.raw_x = price(mu_x, mu_y, c_x, c_y);
  r.raw_y = price(mu_y, mu_x, c_y, c_x);
  r.p_x = std::clamp(r.raw_x, c_x, 1.0);
  r.p_y = std::clamp(r.raw_y, c_y, 1.0);
  r.weighted_avg = mu_x * r.raw_x + mu_y * r.raw_y;
  r.marginal_from_x = 0.5 * (1.0 + r.p_x - r.p_y - s);
  r.marginal_from_y = 0.5 * (1.0 + r.p_x - r.p_y + s);
  r.within_bounds = r.raw_x >= c_x && r.raw_x <= 1.0 && r.raw_y >= c_y &&
                    r.raw_y <= 1.0;
  r.formula_condition = s > 0.0;
  return r;
}

NetValueLaw CompositeRival(const std::vector<double>& prices,
                           const std::vector<Distribution>& dists) {
  if (prices.size() != dists.size()) {
    throw std::invalid_argument("one price per rival distribution");
  }
  std::vector<NetValueLaw::Rival> rivals;
  for (size_t k = 0; k < prices.size(); ++k) {
    rivals.push_back({dists[k], prices[k]});
  }
  return NetValueLaw(std::move(rivals));
}

OligopolyResult OligopolySolve(int n, const Distribution& dist, double c,
                               double s, int bracket_points) {
  if (n < 2) throw std::invalid_argument("need at least two firms");
  if (!(c >= 0.0 && c < 1.0)) {
    throw std::invalid_argument("cost must lie in [0, 1)");
  }
  const FirmParams own{c, 1.0 / n, dist};
  const double rival_mu = (n - 1.0) / n;
  auto g = [&](double p) {
    const NetValueLaw law = CompositeRival(std::vector<double>(n - 1, p),
                                           std::vector<Distribution>(n - 1, dist));
    return FocStarAgainst(own, rival_mu, law, p, s);
  };
  OligopolyResult r;
  const int m = std::max(bracket_points, 2);
  std::vector<double> grid(m);
  std::vector<double> value(m);
  for (int k = 0; k < m; ++k) {
    grid[k] = k + 1 == m ? 1.0 : c + (1.0 - c) * k / (m - 1.0);
    value[k] = g(grid[k]);
  }
  r.price = value[m - 1] >= 0.0 ? 1.0 : c;
  bool found = false;
  for (int k = m - 2; k >= 0; --k) {
    if (!(value[k] > 0.0 && value[k + 1] <= 0.0)) continue;
    ++r.roots_found;
    if (found) continue;
    found = true;
    if (value[k + 1] == 0.0) {
      r.price = grid[k + 1];
      continue;
    }
    boost::uintmax_t max_iter = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        g, grid[k], grid[k + 1], value[k], value[k + 1],
        boost::math::tools::eps_tolerance<double>(50), max_iter);
    r.price = 0.5 * (bracket.first + bracket.second);
  }
  r.foc_residual = g(r.price);
  return r;
}

std::vector<EquilibriumResult> SolveUnknown(MarketParams market,
                                            const SolveOptions& options) {
  market.variant = Variant::kUnknown;
  return Solve(market, options);
}

}  // namespace searchduo
