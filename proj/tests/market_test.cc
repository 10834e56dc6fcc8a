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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "searchduo/market.h"

namespace searchduo {
namespace {

MarketParams Fig1() {
  return MarketParams::Symmetric(Distribution::Uniform(), 0.0, 0.1);
}

TEST_CASE("figure 1 consumers") {
  const PriceProfile p = PriceProfile::Pure(0.6, 0.45);
  CHECK(Decide({0.9, 0.2}, Firm::kX, p, Fig1()) ==
        ConsumerOutcome::kBuyHomeNoSearch);
  CHECK(Decide({0.1, 0.9}, Firm::kX, p, Fig1()) ==
        ConsumerOutcome::kSearchSwitch);
  CHECK(Decide({0.0, 0.0}, Firm::kX, p, Fig1()) ==
        ConsumerOutcome::kExitNoSearch);
  CHECK(Decide({0.5, 0.58}, Firm::kX, p, Fig1()) ==
        ConsumerOutcome::kSearchSwitch);
  // Searches expecting 0.45 but finds 0.7: buys nothing.
  PriceProfile held = p;
  held.p_y = 0.7;
  CHECK(Decide({0.3, 0.6}, Firm::kX, held, Fig1()) ==
        ConsumerOutcome::kSearchExit);
  // Same surprise, but home is still worth buying.
  CHECK(Decide({0.65, 0.7}, Firm::kX, held, Fig1()) ==
        ConsumerOutcome::kSearchBuyHome);
}

TEST_CASE("ties") {
  MarketParams m = Fig1();
  m.s = 0.125;
  const PriceProfile p = PriceProfile::Pure(0.5, 0.5);
  // Search at indifference: v_o - ce - s == v_h - p_h.
  CHECK(Decide({0.75, 0.875}, Firm::kX, p, m) ==
        ConsumerOutcome::kSearchSwitch);
  // Buy over exit at zero net value.
  CHECK(Decide({0.5, 0.0}, Firm::kX, p, m) ==
        ConsumerOutcome::kBuyHomeNoSearch);
  // Home over rival at equal net value after search.
  const PriceProfile surprise{0.5, 0.625, 0.5, 0.5};
  CHECK(Decide({0.75, 0.875}, Firm::kX, surprise, m) ==
        ConsumerOutcome::kSearchBuyHome);
}

TEST_CASE("nobody searches when s >= 1") {
  MarketParams m = Fig1();
  m.s = 1.0;
  const PriceProfile p = PriceProfile::Pure(0.0, 0.0);
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; ++b) {
      const ConsumerOutcome o = Decide({a / 20.0, b / 20.0}, Firm::kX, p, m);
      CHECK((o == ConsumerOutcome::kBuyHomeNoSearch ||
             o == ConsumerOutcome::kExitNoSearch));
    }
  }
}

TEST_CASE("full information depends only on net values") {
  MarketParams m = Fig1();
  m.variant = Variant::kFullInformation;
  const PriceProfile p{0.3, 0.5, 0.9, 0.1};
  CHECK(Decide({0.6, 0.7}, Firm::kX, p, m) ==
        ConsumerOutcome::kBuyHomeNoSearch);
  CHECK(Decide({0.6, 0.85}, Firm::kX, p, m) ==
        ConsumerOutcome::kSearchSwitch);
  CHECK(Decide({0.2, 0.4}, Firm::kX, p, m) == ConsumerOutcome::kExitNoSearch);
  CHECK(m.SearchCost() == 0.0);
}

TEST_CASE("unknown valuations search on expected gain") {
  MarketParams m = Fig1();
  m.variant = Variant::kUnknown;
  const PriceProfile p = PriceProfile::Pure(0.5, 0.5);
  // E(V - 0.5)^+ = 0.125 >= 0.1 for a consumer with nothing at home.
  CHECK(Decide({0.2, 0.9}, Firm::kX, p, m) == ConsumerOutcome::kSearchSwitch);
  CHECK(Decide({0.2, 0.3}, Firm::kX, p, m) == ConsumerOutcome::kSearchExit);
  // Home surplus 0.3: E(V - 0.8)^+ = 0.02 < 0.1.
  CHECK(Decide({0.8, 0.95}, Firm::kX, p, m) ==
        ConsumerOutcome::kBuyHomeNoSearch);
}

TEST_CASE("utility") {
  const PriceProfile p = PriceProfile::Pure(0.6, 0.45);
  CHECK(Utility(ConsumerOutcome::kSearchSwitch, {0.1, 0.9}, Firm::kX, p,
                0.1) == doctest::Approx(0.35));
  CHECK(Utility(ConsumerOutcome::kExitNoSearch, {0.1, 0.1}, Firm::kX, p,
                0.1) == 0.0);
  CHECK(Utility(ConsumerOutcome::kSearchExit, {0.1, 0.1}, Firm::kX, p, 0.1) ==
        doctest::Approx(-0.1));
  CHECK(Utility(ConsumerOutcome::kBuyHomeNoSearch, {0.9, 0.1}, Firm::kX, p,
                0.1) == doctest::Approx(0.3));
  CHECK(Utility(ConsumerOutcome::kSearchBuyHome, {0.9, 0.1}, Firm::kY, p,
                0.1) == doctest::Approx(0.35));
}

TEST_CASE("certainty equivalent of a pure expectation") {
  CHECK(CePrice(0.6) == 0.6);
  CHECK(CePrice(0.2) == 0.2);
  CHECK(CePrice(1.0) == 1.0);
}

TEST_CASE("validation") {
  MarketParams m = Fig1();
  CHECK_NOTHROW(m.Validate());
  m.x.mu = 0.6;
  CHECK_THROWS_AS(m.Validate(), std::invalid_argument);
  m = Fig1();
  m.s = -0.1;
  CHECK_THROWS_AS(m.Validate(), std::invalid_argument);
  m = Fig1();
  m.y.cost = 1.0;
  CHECK_THROWS_AS(m.Validate(), std::invalid_argument);
  m = Fig1();
  m.x.cost = 0.3;
  CHECK_THROWS_AS(ValidatePrices(PriceProfile::Pure(0.2, 0.5), m),
                  std::invalid_argument);
  CHECK_NOTHROW(ValidatePrices(PriceProfile::Pure(0.3, 1.0), m));
}

}  // namespace
}  // namespace searchduo
