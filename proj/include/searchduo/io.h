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


#ifndef SEARCHDUO_IO_H_
#define SEARCHDUO_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "searchduo/conditions.h"
#include "searchduo/demand.h"
#include "searchduo/equilibrium.h"
#include "searchduo/firm.h"
#include "searchduo/market.h"
#include "searchduo/sim.h"
#include "searchduo/variants.h"

namespace searchduo {

using Json = nlohmann::ordered_json;

// Malformed configuration; the message starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// {"type":"uniform"} | {"type":"truncexp","lambda":1.0} |
// {"type":"step","breaks":[...],"densities":[...]}. Unknown keys are errors.
Distribution ParseDistribution(const Json& j, const std::string& path);

// {"firms":[{"cost","mu","dist"},{...}],"s","variant"}; "cost" defaults to 0,
// "s" to 0.1 and "variant" to "known". Throws ConfigError.
MarketParams ParseMarket(const Json& j);
MarketParams LoadMarket(const std::string& file);

Variant ParseVariant(const std::string& name, const std::string& path);

// Rounds to 12 significant digits; non-finite values become null.
Json Number(double x);

Json ToJson(const Distribution& d);
Json ToJson(const MarketParams& m);
Json ToJson(const PriceProfile& p);
Json ToJson(const DemandBreakdown& d);
Json ToJson(const SurplusReport& r);
Json ToJson(const FirmCalculusReport& r);
Json ToJson(const EquilibriumResult& r);
Json ToJson(const Lemma1Report& r);
Json ToJson(const Lemma2Report& r);
Json ToJson(const Thm1Report& r);
Json ToJson(const HotellingResult& r);
Json ToJson(const OligopolyResult& r);
Json ToJson(const SimReport& r);
Json ToJson(const Comparison& c);

// Numerical defaults that shape every result.
Json Settings();

// Two-space indented dump followed by a newline.
std::string Dump(const Json& j);

// Sweep CSV: '#' settings lines, then the fixed header and one row per point.
void WriteSweepCsv(const std::vector<SweepRow>& rows, const Json& settings,
                   std::ostream& out);

}  // namespace searchduo

#endif  // SEARCHDUO_IO_H_
