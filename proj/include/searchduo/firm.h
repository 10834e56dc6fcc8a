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

#ifndef SEARCHDUO_FIRM_H_
#define SEARCHDUO_FIRM_H_

#include "searchduo/market.h"
#include "searchduo/rival_law.h"

namespace searchduo {

// Profit and its price derivatives.
//
// Derivatives are taken holding consumers' expectations fixed, which is what
// a firm controls: a deviation is not seen before search. The switcher
// density term is active only for p_i > ce_i + s; at equality the derivative
// from below is returned. Density derivatives are distributional, so the
// jumps of a density (including the drop to zero at the top of the support)
// contribute point terms.

double Profit(Firm i, const PriceProfile& prices, const MarketParams& market);

// d profit / d p_i. Analytic for known valuations and full information; for
// unknown valuations a Richardson-extrapolated central difference of the
// quadrature profit (h = 1e-6).
double Foc(Firm i, const PriceProfile& prices, const MarketParams& market);

// Known valuations only (throws std::invalid_argument otherwise).
double Soc(Firm i, const PriceProfile& prices, const MarketParams& market);

// d^2 profit / (d p_i d p_j) where the rival's expected price moves with its
// posted price (pure strategies) and firm i's expected price is held fixed.
// Known valuations only.
double CrossPartial(Firm i, const PriceProfile& prices,
                    const MarketParams& market);

// First-order condition with expectations equal to posted prices.
double FocStar(Firm i, double p_x, double p_y, const MarketParams& market);

// The same condition against an arbitrary rival net-value law; used for the
// duopoly (one rival) and for the composite rival of the n-firm extension.
// `rival_mu` is the mass initially attached to the rivals.
double FocStarAgainst(const FirmParams& own, double rival_mu,
                      const NetValueLaw& rival, double price, double s);
double DfocDsAgainst(const FirmParams& own, double rival_mu,
                     const NetValueLaw& rival, double price, double s);

// d FocStar / d s. Analytic for known valuations, zero under full
// information, a central difference in s for unknown valuations.
double DfocDs(Firm i, double p_x, double p_y, const MarketParams& market);

// True when p_i sits within 1e-12 of the hold-up threshold ce_i + s, where
// the derivative is one-sided.
bool NearHoldupThreshold(Firm i, const PriceProfile& prices,
                         const MarketParams& market);

struct FirmCalculusReport {
  double profit = 0.0;
  double foc = 0.0;
  double soc = 0.0;
  double cross_partial = 0.0;
  double foc_star = 0.0;
  double dfoc_ds = 0.0;
  bool one_sided = false;
};

// soc and cross_partial are NaN outside the known-valuation variant.
FirmCalculusReport Calculus(Firm i, const PriceProfile& prices,
                            const MarketParams& market);

struct BestResponse {
  double price = 0.0;
  double profit = 0.0;
  // Another grid point, not adjacent to the maximizer, came within 1e-9 of
  // the maximal profit.
  bool multiple_maxima = false;
};

// argmax over p_i in [c_i, 1] of profit given the rival's price and fixed
// consumer expectations: a grid scan followed by bisection on the sign of the
// first-order condition inside the winning cell.
BestResponse FindBestResponse(Firm i, double rival_price, double own_ce,
                              double rival_ce, const MarketParams& market,
                              int grid_points = 400);

}  // namespace searchduo

#endif  // SEARCHDUO_FIRM_H_
