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

#include <sstream>
#include <string>

#include "searchduo/format.h"
#include "searchduo/io.h"

namespace searchduo {
namespace {

Json Base() {
  return Json::parse(R"({
    "firms": [
      {"cost": 0.1, "mu": 0.6, "dist": {"type": "uniform"}},
      {"mu": 0.4, "dist": {"type": "step", "breaks": [0.5],
                           "densities": [1.5, 0.5]}}
    ],
    "s": 0.05,
    "variant": "unknown"
  })");
}

std::string ErrorPath(const Json& j) {
  try {
    ParseMarket(j);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "";
}

TEST_CASE("parse a market") {
  const MarketParams m = ParseMarket(Base());
  CHECK(m.x.cost == 0.1);
  CHECK(m.y.cost == 0.0);
  CHECK(m.x.mu == 0.6);
  CHECK(m.s == 0.05);
  CHECK(m.variant == Variant::kUnknown);
  CHECK(m.y.dist.kind() == DistKind::kStep);
  CHECK(m.y.dist.Cdf(0.5) == doctest::Approx(0.75));

  Json j = Base();
  j.erase("s");
  j.erase("variant");
  const MarketParams d = ParseMarket(j);
  CHECK(d.s == 0.1);
  CHECK(d.variant == Variant::kKnown);

  const Json round = ToJson(m);
  CHECK(ParseMarket(round).y.dist.Pdf(0.7) == doctest::Approx(0.5));
}

TEST_CASE("config errors name the field") {
  Json j = Base();
  j["firms"][1]["mu"] = 0.5;
  CHECK(ErrorPath(j) == "$.firms");

  j = Base();
  j["firms"][0]["dist"]["type"] = "normal";
  CHECK(ErrorPath(j) == "$.firms[0].dist.type");

  j = Base();
  j["firms"][1]["dist"]["densities"] = Json::array({1.0, 1.0, 1.0});
  CHECK(ErrorPath(j) == "$.firms[1].dist");

  j = Base();
  j["firms"][0]["colour"] = "red";
  CHECK(ErrorPath(j) == "$.firms[0].colour");

  j = Base();
  j["s"] = -1;
  CHECK(ErrorPath(j) == "$.s");

  j = Base();
  j["variant"] = "psychic";
  CHECK(ErrorPath(j) == "$.variant");

  j = Base();
  j["firms"][0]["cost"] = "cheap";
  CHECK(ErrorPath(j) == "$.firms[0].cost");

  j = Base();
  j["firms"][0].erase("mu");
  CHECK(ErrorPath(j) == "$.firms[0].mu");

  CHECK(ErrorPath(Json::array()) == "$");
  CHECK_THROWS_AS(LoadMarket("/nonexistent/market.json"), ConfigError);
}

TEST_CASE("numbers carry twelve significant digits") {
  CHECK(Number(1.0 / 3.0).dump() == "0.333333333333");
  CHECK(Number(0.1).dump() == "0.1");
  CHECK(Number(std::nan("")).is_null());
  CHECK(Number(-0.0).dump() == "0.0");
  CHECK(FormatNumber(2.0 / 3.0) == "0.666666666667");
}

TEST_CASE("sweep csv") {
  SweepRow r;
  r.value = 0.1;
  r.p_x = 1.0 / 3.0;
  std::ostringstream out;
  WriteSweepCsv({r}, Json{{"seed", 1}}, out);
  CHECK(out.str() ==
        "# seed=1\n"
        "param,pX,pY,piX,piY,CS,TS,exit,search,switchX,switchY\n"
        "0.1,0.333333333333,0,0,0,0,0,0,0,0,0\n");
}

TEST_CASE("dump") {
  CHECK(Dump(Json{{"a", 1}}) == "{\n  \"a\": 1\n}\n");
  const Json s = Settings();
  CHECK(s.contains("quadrature_nodes"));
}

}  // namespace
}  // namespace searchduo
