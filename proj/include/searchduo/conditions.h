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


#ifndef SEARCHDUO_CONDITIONS_H_
#define SEARCHDUO_CONDITIONS_H_

#include <string>
#include <vector>

#include "searchduo/dist.h"
#include "searchduo/market.h"

namespace searchduo {

// Grid checkers for the sufficient conditions on valuation laws. Density
// slopes are one-sided; at breakpoints both one-sided density values are
// tried and the worse one is kept.

struct Lemma1Report {
  bool holds = true;
  // Point (P, w) with the smallest slack (P - c) f'(P + w) + f(P + w).
  double worst_price = 0.0;
  double worst_w = 0.0;
  double worst_slack = 0.0;
};

// Evaluated on a grid over [c, 1] x [0, 1] plus the w that put P + w on a
// breakpoint, wherever P + w lies inside the support.
Lemma1Report CheckLemma1(const Distribution& dist, double c,
                         int grid_points = 200);

struct SubCheck {
  bool holds = true;
  // Witness of the worst violation; meaningful only when !holds.
  std::string firm;
  double at = 0.0;
  double value = 0.0;
};

struct Lemma2Report {
  SubCheck equal_shares;
  SubCheck nonincreasing_density;
  SubCheck bounded_elasticity;

  bool holds() const {
    return equal_shares.holds && nonincreasing_density.holds &&
           bounded_elasticity.holds;
  }
};

Lemma2Report CheckLemma2(const MarketParams& market, int grid_points = 200);

struct Thm1FirmReport {
  // Pointwise condition over w in [0, 1 - s], read literally.
  bool pointwise_holds = true;
  double worst_w = 0.0;
  double worst_slack = 0.0;
  // mu_i (1 - P_j - s) <= mu_j (1 - P_j); set only when both laws are
  // uniform.
  bool has_uniform_form = false;
  bool uniform_holds = false;
  double uniform_lhs = 0.0;
  double uniform_rhs = 0.0;

  bool holds() const {
    return has_uniform_form ? uniform_holds : pointwise_holds;
  }
};

struct Thm1Report {
  bool no_search_regime = false;
  Thm1FirmReport x;
  Thm1FirmReport y;

  bool holds() const {
    return no_search_regime || (x.holds() && y.holds());
  }
};

// Throws std::invalid_argument unless market.s > 0.
Thm1Report CheckThm1(const MarketParams& market, const PriceProfile& prices,
                     int grid_points = 200);

}  // namespace searchduo

#endif  // SEARCHDUO_CONDITIONS_H_
