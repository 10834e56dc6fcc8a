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

#ifndef SEARCHDUO_MARKET_H_
#define SEARCHDUO_MARKET_H_

#include <string>

#include "searchduo/dist.h"

namespace searchduo {

enum class Firm { kX = 0, kY = 1 };

inline Firm Rival(Firm f) { return f == Firm::kX ? Firm::kY : Firm::kX; }
inline const char* FirmName(Firm f) { return f == Firm::kX ? "X" : "Y"; }

enum class Variant { kKnown, kUnknown, kFullInformation };

const char* VariantName(Variant v);

struct FirmParams {
  double cost = 0.0;
  // Mass of consumers who initially observe this firm's price.
  double mu = 0.5;
  Distribution dist = Distribution::Uniform();
};

struct MarketParams {
  FirmParams x;
  FirmParams y;
  double s = 0.1;
  Variant variant = Variant::kKnown;

  const FirmParams& firm(Firm f) const { return f == Firm::kX ? x : y; }
  FirmParams& firm(Firm f) { return f == Firm::kX ? x : y; }

  // Effective search cost; the full-information benchmark has none.
  double SearchCost() const {
    return variant == Variant::kFullInformation ? 0.0 : s;
  }

  // Throws std::invalid_argument on violated invariants: shares summing to
  // one within 1e-12, costs in [0,1), s >= 0.
  void Validate() const;

  static MarketParams Symmetric(const Distribution& dist, double cost,
                                double s, Variant variant = Variant::kKnown);
};

// Posted prices and the certainty-equivalent prices consumers expect.
struct PriceProfile {
  double p_x = 0.0;
  double p_y = 0.0;
  double ce_x = 0.0;
  double ce_y = 0.0;

  double posted(Firm f) const { return f == Firm::kX ? p_x : p_y; }
  double expected(Firm f) const { return f == Firm::kX ? ce_x : ce_y; }
  double& posted(Firm f) { return f == Firm::kX ? p_x : p_y; }
  double& expected(Firm f) { return f == Firm::kX ? ce_x : ce_y; }

  // Expectations equal posted prices.
  static PriceProfile Pure(double p_x, double p_y) {
    return {p_x, p_y, p_x, p_y};
  }
};

// Throws std::invalid_argument unless every price lies in [c_i, 1].
void ValidatePrices(const PriceProfile& prices, const MarketParams& market);

enum class ConsumerOutcome {
  kBuyHomeNoSearch,
  kExitNoSearch,
  kSearchBuyHome,
  kSearchSwitch,
  kSearchExit,
};

inline constexpr int kNumOutcomes = 5;

const char* OutcomeName(ConsumerOutcome o);

struct Valuations {
  double home;
  double other;
};

// Consumer decision rule. Ties: search at indifference, buy over exit, and
// the home firm over the rival.
ConsumerOutcome Decide(const Valuations& v, Firm home,
                       const PriceProfile& prices, const MarketParams& market);

double Utility(ConsumerOutcome outcome, const Valuations& v, Firm home,
               const PriceProfile& prices, double s);

// Certainty-equivalent price under a pure expected strategy.
inline double CePrice(double expected_price) { return expected_price; }

}  // namespace searchduo

#endif  // SEARCHDUO_MARKET_H_
