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


// Independent oracles shared by the unit and acceptance tests.

#ifndef SEARCHDUO_TESTS_TEST_UTIL_H_
#define SEARCHDUO_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "searchduo/dist.h"
#include "searchduo/market.h"

namespace searchduo::testing {

using Poly = std::vector<std::array<double, 2>>;

inline Poly UnitSquare() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

// Sutherland-Hodgman: keeps a*x + b*y + c >= 0.
inline Poly Clip(const Poly& poly, double a, double b, double c) {
  Poly out;
  const size_t n = poly.size();
  for (size_t k = 0; k < n; ++k) {
    const auto& p = poly[k];
    const auto& q = poly[(k + 1) % n];
    const double fp = a * p[0] + b * p[1] + c;
    const double fq = a * q[0] + b * q[1] + c;
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  }
  return out;
}

inline double Area(const Poly& poly) {
  double twice = 0.0;
  for (size_t k = 0; k < poly.size(); ++k) {
    const auto& p = poly[k];
    const auto& q = poly[(k + 1) % poly.size()];
    twice += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * std::abs(twice);
}

// Areas of the outcome regions of one population with uniform valuations,
// coordinates (v_home, v_other).
struct RegionAreas {
  double buy_home_no_search;
  double exit_no_search;
  double search_buy_home;
  double search_switch;
  double search_exit;
};

inline RegionAreas KnownAreas(double p_home, double p_other, double ce_other,
                              double s) {
  const double g = ce_other + s;
  RegionAreas r;
  // No search: v_o - g < max(0, v_h - p_h).
  Poly stay = Clip(UnitSquare(), 1, 0, -p_home);
  stay = Clip(stay, 1, -1, -p_home + g);
  r.buy_home_no_search = Area(stay);
  Poly gone = Clip(UnitSquare(), -1, 0, p_home);
  gone = Clip(gone, 0, -1, g);
  r.exit_no_search = Area(gone);
  Poly search = Clip(UnitSquare(), 0, 1, -g);
  search = Clip(search, -1, 1, p_home - g);
  Poly home = Clip(Clip(search, 1, 0, -p_home), 1, -1, -p_home + p_other);
  r.search_buy_home = Area(home);
  Poly away = Clip(Clip(search, 0, 1, -p_other), -1, 1, p_home - p_other);
  r.search_switch = Area(away);
  Poly out = Clip(Clip(search, -1, 0, p_home), 0, -1, p_other);
  r.search_exit = Area(out);
  return r;
}

struct DemandOracle {
  double total;
  double loyal_no_search;
  double loyal_after_search;
  double switchers_in;
  double exit_mass;
  double search_mass;
};

// Demand of firm i in a market with uniform laws, from polygon areas.
inline DemandOracle KnownDemandOracle(Firm i, const PriceProfile& prices,
                                      const MarketParams& m) {
  const Firm j = Rival(i);
  const RegionAreas own = KnownAreas(prices.posted(i), prices.posted(j),
                                     prices.expected(j), m.s);
  const RegionAreas other = KnownAreas(prices.posted(j), prices.posted(i),
                                       prices.expected(i), m.s);
  const double mu_i = m.firm(i).mu;
  const double mu_j = m.firm(j).mu;
  DemandOracle d;
  d.loyal_no_search = mu_i * own.buy_home_no_search;
  d.loyal_after_search = mu_i * own.search_buy_home;
  d.switchers_in = mu_j * other.search_switch;
  d.exit_mass = mu_i * (own.exit_no_search + own.search_exit);
  d.search_mass =
      mu_i * (own.search_buy_home + own.search_switch + own.search_exit);
  d.total = d.loyal_no_search + d.loyal_after_search + d.switchers_in;
  return d;
}

// Random markets for property suites.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : gen_(seed) {}

  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  Distribution AnyDistribution() {
    switch (std::uniform_int_distribution<int>(0, 2)(gen_)) {
      case 0:
        return Distribution::Uniform();
      case 1:
        return Distribution::TruncatedExponential(Uniform(0.3, 3.0));
      default: {
        // One or two breaks with densities rescaled to integrate to one.
        std::vector<double> breaks{Uniform(0.2, 0.45)};
        if (Uniform(0, 1) < 0.5) breaks.push_back(Uniform(0.55, 0.8));
        std::vector<double> dens;
        double lo = 0.0;
        double mass = 0.0;
        for (size_t k = 0; k <= breaks.size(); ++k) {
          const double hi = k < breaks.size() ? breaks[k] : 1.0;
          dens.push_back(Uniform(0.3, 2.0));
          mass += dens.back() * (hi - lo);
          lo = hi;
        }
        for (double& d : dens) d /= mass;
        // Exact renormalization so the construction check passes.
        lo = 0.0;
        mass = 0.0;
        for (size_t k = 0; k + 1 < dens.size(); ++k) {
          mass += dens[k] * (breaks[k] - lo);
          lo = breaks[k];
        }
        dens.back() = (1.0 - mass) / (1.0 - lo);
        return Distribution::Step(breaks, dens);
      }
    }
  }

  MarketParams AnyMarket(Variant variant) {
    MarketParams m;
    m.x = {Uniform(0.0, 0.3), Uniform(0.2, 0.8), AnyDistribution()};
    m.y = {Uniform(0.0, 0.3), 1.0 - m.x.mu, AnyDistribution()};
    m.s = Uniform(0.02, 0.5);
    m.variant = variant;
    return m;
  }

  PriceProfile AnyPrices(const MarketParams& m) {
    PriceProfile p;
    p.p_x = Uniform(m.x.cost + 0.05, 0.95);
    p.p_y = Uniform(m.y.cost + 0.05, 0.95);
    p.ce_x = std::clamp(p.p_x + Uniform(-0.1, 0.1), m.x.cost, 1.0);
    p.ce_y = std::clamp(p.p_y + Uniform(-0.1, 0.1), m.y.cost, 1.0);
    return p;
  }

  std::mt19937_64& gen() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// True when firm i's profit is smooth (to third order) within `margin` of
// the given prices: no density breakpoint, hold-up threshold or shifted
// breakpoint crossing lies that close.
inline bool AwayFromKinks(Firm i, const PriceProfile& p, const MarketParams& m,
                          double margin) {
  const Firm j = Rival(i);
  const double s = m.s;
  const double p_i = p.posted(i);
  const double p_j = p.posted(j);
  const std::vector<double> own = m.firm(i).dist.Knots();
  const std::vector<double> rival = m.firm(j).dist.Knots();
  const double as[] = {p_i, std::max(p_i, p.expected(i) + s), p_i + s};
  const double bs[] = {std::max(p.expected(j) + s, p_j), p_j,
                       p.expected(j) + s, p_j + s};
  auto near = [&](double a, double b) { return std::abs(a - b) < margin; };
  if (near(p_i, p.expected(i) + s) || near(p_j, p.expected(j) + s)) {
    return false;
  }
  for (double x : own) {
    for (double a : as) {
      if (near(a, x)) return false;
      for (double b : bs) {
        for (double y : rival) {
          if (near(a + y - b, x)) return false;
        }
      }
    }
  }
  for (double y : rival) {
    for (double b : bs) {
      if (near(y, b)) return false;
    }
  }
  return true;
}

}  // namespace searchduo::testing

#endif  // SEARCHDUO_TESTS_TEST_UTIL_H_
