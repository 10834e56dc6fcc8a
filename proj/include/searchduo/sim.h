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


#ifndef SEARCHDUO_SIM_H_
#define SEARCHDUO_SIM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "searchduo/demand.h"
#include "searchduo/market.h"

namespace searchduo {

inline constexpr std::int64_t kSimChunk = 65536;

struct SimReport {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  DemandBreakdown demand_x;
  DemandBreakdown demand_y;
  // Binomial standard errors sqrt(p (1 - p) / n) of each component.
  DemandBreakdown se_x;
  DemandBreakdown se_y;
  double consumer_surplus = 0.0;
  double consumer_surplus_se = 0.0;

  const DemandBreakdown& demand(Firm f) const {
    return f == Firm::kX ? demand_x : demand_y;
  }
  const DemandBreakdown& se(Firm f) const {
    return f == Firm::kX ? se_x : se_y;
  }
};

// Consumer k draws from its own counter stream: home firm X with probability
// mu_X, then v_X and v_Y. Results do not depend on `threads`. Throws
// std::invalid_argument for n < 10^4.
SimReport Simulate(const MarketParams& market, const PriceProfile& prices,
                   std::int64_t n, std::uint64_t seed, int threads = 1);

struct ZScore {
  std::string component;
  double simulated = 0.0;
  double exact = 0.0;
  double se = 0.0;
  double z = 0.0;
};

struct Comparison {
  std::vector<ZScore> rows;
  bool pass = true;
  double max_abs_z = 0.0;
};

// z per component with the standard error evaluated at the exact value
// (falling back to the sampled one); z = 0 when both sides are zero. Pass
// iff every |z| <= 4. A NaN `exact_cs` skips the surplus row.
Comparison Compare(const SimReport& sim, const DemandBreakdown& exact_x,
                   const DemandBreakdown& exact_y, double exact_cs);

}  // namespace searchduo

#endif  // SEARCHDUO_SIM_H_
