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


#ifndef SEARCHDUO_EQUILIBRIUM_H_
#define SEARCHDUO_EQUILIBRIUM_H_

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "searchduo/demand.h"
#include "searchduo/dist.h"
#include "searchduo/market.h"

namespace searchduo {

enum class Multiplicity { kUniqueFound, kMultipleFound, kBoundary };

const char* MultiplicityName(Multiplicity m);

struct EquilibriumResult {
  double p_x = 0.0;
  double p_y = 0.0;
  DemandBreakdown demand_x;
  DemandBreakdown demand_y;
  double profit_x = 0.0;
  double profit_y = 0.0;
  double foc_x = 0.0;
  double foc_y = 0.0;
  bool stable = false;
  double br_slope_x = 0.0;
  double br_slope_y = 0.0;
  double br_slope_product = 0.0;
  double dp_ds_x = 0.0;
  double dp_ds_y = 0.0;
  Multiplicity multiplicity = Multiplicity::kUniqueFound;
  int iterations = 0;

  double price(Firm f) const { return f == Firm::kX ? p_x : p_y; }
};

struct SolveOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
  // Limits from the two starts further apart than this are distinct.
  double distinct = 1e-6;
  // Grid used to bracket roots of the expectation-consistent condition.
  int bracket_points = 32;
  // Fill stability and price sensitivity.
  bool diagnostics = true;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<std::array<double, 2>> tail)
      : std::runtime_error(what), tail_(std::move(tail)) {}
  const std::vector<std::array<double, 2>>& tail() const { return tail_; }

 private:
  std::vector<std::array<double, 2>> tail_;
};

// Largest root in [c_i, 1] of FocStar in own price given the rival's price;
// c_i when the condition is negative throughout, 1 when positive throughout.
double ConsistentBestResponse(Firm i, double rival_price,
                              const MarketParams& market,
                              int bracket_points = 32);

// Iterates consistent best responses from (c_X, c_Y) and from (1, 1), then
// polishes each limit with damped Newton steps. Returns one result, or the
// low and the high equilibrium (in that order) when the limits differ.
// Throws SolverError when the iteration cap is reached.
std::vector<EquilibriumResult> Solve(const MarketParams& market,
                                     const SolveOptions& options = {});

// Highest-price equilibrium.
EquilibriumResult SolveHighest(const MarketParams& market,
                               const SolveOptions& options = {});

// Best-response slopes by finite differences (h = 1e-4) of the profit
// maximizer with own expectations fixed at the equilibrium price and the
// rival's expectations following its price.
void Stability(EquilibriumResult& result, const MarketParams& market);

// dP*/ds from J dP = -dFocStar/ds, J the finite-difference Jacobian of
// (FocStar_X, FocStar_Y). Prices at a bound of [c_i, 1] are held there.
void PriceSensitivity(EquilibriumResult& result, const MarketParams& market);

// Central difference of re-solved highest equilibria at s +- h.
std::array<double, 2> ResolveSensitivity(const MarketParams& market,
                                         double h = 1e-3);

enum class SweepParam { kS, kCostX, kCostY, kMuX };

const char* SweepParamName(SweepParam p);

struct SweepRow {
  double value = 0.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double profit_x = 0.0;
  double profit_y = 0.0;
  double consumer_surplus = 0.0;
  double total_surplus = 0.0;
  double exit_mass = 0.0;
  double search_mass = 0.0;
  double switch_share_x = 0.0;
  double switch_share_y = 0.0;
};

MarketParams WithParam(MarketParams market, SweepParam param, double value);

// One independent highest-equilibrium solve per grid point, so sequential
// and threaded runs agree exactly.
std::vector<SweepRow> Sweep(const MarketParams& market, SweepParam param,
                            const std::vector<double>& grid, int threads = 1,
                            const SolveOptions& options = {});

// argmax of (P - c)(1 - F(P)) on [c, 1]: 200-point grid, Brent polish, then
// bisection on the marginal profit.
double MonopolyPrice(const Distribution& dist, double c);

}  // namespace searchduo

#endif  // SEARCHDUO_EQUILIBRIUM_H_
