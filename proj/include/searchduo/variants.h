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


#ifndef SEARCHDUO_VARIANTS_H_
#define SEARCHDUO_VARIANTS_H_

#include <vector>

#include "searchduo/dist.h"
#include "searchduo/equilibrium.h"
#include "searchduo/market.h"
#include "searchduo/rival_law.h"

namespace searchduo {

// Perfectly negatively correlated valuations, v_Y = 1 - v_X.
struct HotellingResult {
  // Closed form as is.
  double raw_x = 0.0;
  double raw_y = 0.0;
  // Clamped to [c_i, 1].
  double p_x = 0.0;
  double p_y = 0.0;
  // mu_X raw_x + mu_Y raw_y.
  double weighted_avg = 0.0;
  // v_X of the indifferent searcher starting at X (switches at or below) and
  // starting at Y (switches at or above), at the clamped prices.
  double marginal_from_x = 0.0;
  double marginal_from_y = 0.0;
  // Both raw prices in [c_i, 1].
  bool within_bounds = false;
  // The equilibrium requirement P_i < P_i* + s, i.e. s > 0.
  bool formula_condition = false;

  bool valid() const { return within_bounds && formula_condition; }
};

// Throws std::invalid_argument unless the shares sum to one and s >= 0.
HotellingResult HotellingPrices(double mu_x, double mu_y, double c_x,
                                double c_y, double s);

// Best rival net value max_j {v_j - P_j}.
NetValueLaw CompositeRival(const std::vector<double>& prices,
                           const std::vector<Distribution>& dists);

struct OligopolyResult {
  double price = 0.0;
  double foc_residual = 0.0;
  int roots_found = 0;
};

// Symmetric price with n firms of share 1/n, each facing the composite of
// the other n - 1 at the common price. Highest root of the condition.
OligopolyResult OligopolySolve(int n, const Distribution& dist, double c,
                               double s, int bracket_points = 64);

// Solve with the unknown-valuation demand.
std::vector<EquilibriumResult> SolveUnknown(MarketParams market,
                                            const SolveOptions& options = {});

}  // namespace searchduo

#endif  // SEARCHDUO_VARIANTS_H_
