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

#include "searchduo/market.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace searchduo {

const char* VariantName(Variant v) {
  switch (v) {
    case Variant::kKnown:
      return "known";
    case Variant::kUnknown:
      return "unknown";
    case Variant::kFullInformation:
      return "full";
  }
  return "known";
}

void MarketParams::Validate() const {
  for (Firm f : {Firm::kX, Firm::kY}) {
    const FirmParams& p = firm(f);
    const std::string name = FirmName(f);
    if (!(p.cost >= 0.0 && p.cost < 1.0)) {
      throw std::invalid_argument("firm " + name + " cost must lie in [0,1)");
    }
    if (!(p.mu >= 0.0 && p.mu <= 1.0)) {
      throw std::invalid_argument("firm " + name + " share must lie in [0,1]");
    }
  }
  if (std::abs(x.mu + y.mu - 1.0) > 1e-12) {
    throw std::invalid_argument("initial shares must sum to 1");
  }
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("search cost must be finite and >= 0");
  }
}

MarketParams MarketParams::Symmetric(const Distribution& dist, double cost,
                                     double s, Variant variant) {
  MarketParams m;
  m.x = {cost, 0.5, dist};
  m.y = {cost, 0.5, dist};
  m.s = s;
  m.variant = variant;
  return m;
}

void ValidatePrices(const PriceProfile& prices, const MarketParams& market) {
  for (Firm f : {Firm::kX, Firm::kY}) {
    const double c = market.firm(f).cost;
    for (double p : {prices.posted(f), prices.expected(f)}) {
      if (!(p >= c && p <= 1.0)) {
        throw std::invalid_argument(std::string("price of firm ") +
                                    FirmName(f) + " must lie in [cost, 1]");
      }
    }
  }
}

const char* OutcomeName(ConsumerOutcome o) {
  switch (o) {
    case ConsumerOutcome::kBuyHomeNoSearch:
      return "buy-home-no-search";
    case ConsumerOutcome::kExitNoSearch:
      return "exit-no-search";
    case ConsumerOutcome::kSearchBuyHome:
      return "search-buy-home";
    case ConsumerOutcome::kSearchSwitch:
      return "search-switch";
    case ConsumerOutcome::kSearchExit:
      return "search-exit";
  }
  return "exit-no-search";
}

namespace {

// Choice after both prices are known.
ConsumerOutcome ChooseInformed(double home_net, double other_net) {
  if (home_net >= std::max(0.0, other_net)) {
    return ConsumerOutcome::kSearchBuyHome;
  }
  if (other_net >= 0.0) return ConsumerOutcome::kSearchSwitch;
  return ConsumerOutcome::kSearchExit;
}

}  // namespace

ConsumerOutcome Decide(const Valuations& v, Firm home,
                       const PriceProfile& prices,
                       const MarketParams& market) {
  const Firm other = Rival(home);
  const double home_net = v.home - prices.posted(home);
  const double other_net = v.other - prices.posted(other);
  const double stay = std::max(0.0, home_net);

  if (market.variant == Variant::kFullInformation) {
    switch (ChooseInformed(home_net, other_net)) {
      case ConsumerOutcome::kSearchBuyHome:
        return ConsumerOutcome::kBuyHomeNoSearch;
      case ConsumerOutcome::kSearchSwitch:
        return ConsumerOutcome::kSearchSwitch;
      default:
        return ConsumerOutcome::kExitNoSearch;
    }
  }

  bool search = false;
  if (market.variant == Variant::kKnown) {
    search = market.s < 1.0 &&
             v.other - prices.expected(other) - market.s >= stay;
  } else {
    // E max{0, home_net, t - ce_other} - s >= stay  <=>  E(t - ce - stay)^+ >= s
    const Distribution& law = market.firm(other).dist;
    search = law.ExpectedExcess(prices.expected(other) + stay) >= market.s;
  }
  if (!search) {
    return home_net >= 0.0 ? ConsumerOutcome::kBuyHomeNoSearch
                           : ConsumerOutcome::kExitNoSearch;
  }
  return ChooseInformed(home_net, other_net);
}

double Utility(ConsumerOutcome outcome, const Valuations& v, Firm home,
               const PriceProfile& prices, double s) {
  const Firm other = Rival(home);
  switch (outcome) {
    case ConsumerOutcome::kBuyHomeNoSearch:
      return v.home - prices.posted(home);
    case ConsumerOutcome::kExitNoSearch:
      return 0.0;
    case ConsumerOutcome::kSearchBuyHome:
      return v.home - prices.posted(home) - s;
    case ConsumerOutcome::kSearchSwitch:
      return v.other - prices.posted(other) - s;
    case ConsumerOutcome::kSearchExit:
      return -s;
  }
  return 0.0;
}

}  // namespace searchduo
