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


#include "searchduo/sim.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "searchduo/parallel.h"

namespace searchduo {
namespace {

// Per firm: loyal no search, loyal after search, switchers in, exit, search.
struct Tally {
  std::array<std::array<std::int64_t, 5>, 2> count{};
  double utility = 0.0;
  double utility_sq = 0.0;
};

Tally Merge(const Tally& a, const Tally& b) {
  Tally t;
  for (int f = 0; f < 2; ++f) {
    for (int k = 0; k < 5; ++k) t.count[f][k] = a.count[f][k] + b.count[f][k];
  }
  t.utility = a.utility + b.utility;
  t.utility_sq = a.utility_sq + b.utility_sq;
  return t;
}

// Fixed pairwise reduction order.
Tally Reduce(const std::vector<Tally>& parts, size_t lo, size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const size_t mid = lo + (hi - lo) / 2;
  return Merge(Reduce(parts, lo, mid), Reduce(parts, mid, hi));
}

Tally RunChunk(const MarketParams& market, const PriceProfile& prices,
               std::int64_t begin, std::int64_t end, std::uint64_t seed) {
  Tally t;
  const double s = market.SearchCost();
  for (std::int64_t k = begin; k < end; ++k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k));
    const Firm home = rng.NextUniform() < market.x.mu ? Firm::kX : Firm::kY;
    const double v_x = Sample(market.x.dist, rng);
    const double v_y = Sample(market.y.dist, rng);
    const Valuations v = home == Firm::kX ? Valuations{v_x, v_y}
                                          : Valuations{v_y, v_x};
    const ConsumerOutcome o = Decide(v, home, prices, market);
    const int h = static_cast<int>(home);
    const int r = 1 - h;
    switch (o) {
      case ConsumerOutcome::kBuyHomeNoSearch:
        ++t.count[h][0];
        break;
      case ConsumerOutcome::kExitNoSearch:
        ++t.count[h][3];
        break;
      case ConsumerOutcome::kSearchBuyHome:
        ++t.count[h][1];
        ++t.count[h][4];
        break;
      case ConsumerOutcome::kSearchSwitch:
        ++t.count[r][2];
        ++t.count[h][4];
        break;
      case ConsumerOutcome::kSearchExit:
        ++t.count[h][3];
        ++t.count[h][4];
        break;
    }
    const double u = Utility(o, v, home, prices, s);
    t.utility += u;
    t.utility_sq += u * u;
  }
  return t;
}

DemandBreakdown FromArray(const std::array<double, 5>& a) {
  return {a[0], a[1], a[2], a[3], a[4]};
}

std::array<double, 5> ToArray(const DemandBreakdown& d) {
  return {d.loyal_no_search, d.loyal_after_search, d.switchers_in, d.exit_mass,
          d.search_mass};
}

constexpr std::array<const char*, 5> kComponentNames = {
    "loyal_no_search", "loyal_after_search", "switchers_in", "exit_mass",
    "search_mass"};

ZScore Score(const std::string& name, double sim, double exact,
             double sim_se, double null_se) {
  ZScore z{name, sim, exact, null_se > 0.0 ? null_se : sim_se, 0.0};
  if (sim == exact) return z;
  z.z = z.se > 0.0 ? (sim - exact) / z.se
                   : std::copysign(INFINITY, sim - exact);
  return z;
}

}  // namespace

SimReport Simulate(const MarketParams& market, const PriceProfile& prices,
                   std::int64_t n, std::uint64_t seed, int threads) {
  if (n < 10000) throw std::invalid_argument("simulate needs n >= 10^4");
  market.Validate();
  const std::int64_t chunks = (n + kSimChunk - 1) / kSimChunk;
  std::vector<Tally> parts(chunks);
  ParallelFor(static_cast<int>(chunks), threads, [&](int c) {
    const std::int64_t begin = c * kSimChunk;
    parts[c] = RunChunk(market, prices, begin, std::min(n, begin + kSimChunk),
                        seed);
  });
  const Tally total = Reduce(parts, 0, parts.size());

  SimReport r;
  r.n = n;
  r.seed = seed;
  const double nn = static_cast<double>(n);
  for (int f = 0; f < 2; ++f) {
    std::array<double, 5> est{};
    std::array<double, 5> se{};
    for (int k = 0; k < 5; ++k) {
      est[k] = total.count[f][k] / nn;
      se[k] = std::sqrt(est[k] * (1.0 - est[k]) / nn);
    }
    (f == 0 ? r.demand_x : r.demand_y) = FromArray(est);
    (f == 0 ? r.se_x : r.se_y) = FromArray(se);
  }
  r.consumer_surplus = total.utility / nn;
  const double var =
      std::max(0.0, total.utility_sq / nn - r.consumer_surplus *
                                                r.consumer_surplus) *
      nn / (nn - 1.0);
  r.consumer_surplus_se = std::sqrt(var / nn);
  return r;
}

Comparison Compare(const SimReport& sim, const DemandBreakdown& exact_x,
                   const DemandBreakdown& exact_y, double exact_cs) {
  Comparison out;
  const double nn = static_cast<double>(sim.n);
  for (Firm f : {Firm::kX, Firm::kY}) {
    const auto est = ToArray(sim.demand(f));
    const auto se = ToArray(sim.se(f));
    const auto exact = ToArray(f == Firm::kX ? exact_x : exact_y);
    for (int k = 0; k < 5; ++k) {
      const double p = std::clamp(exact[k], 0.0, 1.0);
      out.rows.push_back(Score(std::string(kComponentNames[k]) + "_" +
                                   FirmName(f),
                               est[k], exact[k], se[k],
                               std::sqrt(p * (1.0 - p) / nn)));
    }
  }
  if (!std::isnan(exact_cs)) {
    out.rows.push_back(Score("consumer_surplus", sim.consumer_surplus,
                             exact_cs, sim.consumer_surplus_se, 0.0));
  }
  for (const ZScore& z : out.rows) {
    out.max_abs_z = std::max(out.max_abs_z, std::abs(z.z));
  }
  out.pass = out.max_abs_z <= 4.0;
  return out;
}

}  // namespace searchduo
