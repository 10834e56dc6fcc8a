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

// Kink-split composite Gauss-Legendre quadrature.
//
// Every integrand in the demand and calculus layers is smooth between points
// that are known in closed form (prices, prices plus search cost, and the
// places where a shifted argument crosses a density breakpoint). Those points
// are passed in as cuts and each piece gets a fixed 64-node rule, so
// piecewise-polynomial integrands are integrated exactly.

#ifndef SEARCHDUO_QUADRATURE_H_
#define SEARCHDUO_QUADRATURE_H_

#include <algorithm>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "searchduo/dist.h"

namespace searchduo {

inline constexpr int kQuadratureNodes = 64;

// Integrates fn over [lo, hi] as a sum over the pieces delimited by `cuts`.
// Cuts outside (lo, hi) are ignored; pieces are summed in ascending order.
template <class Fn>
double IntegrateSplit(Fn&& fn, double lo, double hi, std::vector<double> cuts) {
  if (!(hi > lo)) return 0.0;
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  using Rule = boost::math::quadrature::gauss<double, kQuadratureNodes>;
  double total = 0.0;
  double left = lo;
  for (double c : cuts) {
    if (c <= left) continue;
    const double right = std::min(c, hi);
    if (right - left > 1e-15) total += Rule::integrate(fn, left, right);
    left = right;
    if (left >= hi) break;
  }
  return total;
}

// int_lo^hi phi(a + max(0, w - b)) dLaw(w), where phi is smooth between
// `phi_knots`. The flat part w < b is done in closed form through the cdf.
// Law needs Pdf, Cdf, Knots, Lower and Upper.
template <class Law, class Phi>
double ShiftedIntegral(const Law& law, Phi&& phi,
                       const std::vector<double>& phi_knots, double a,
                       double b, double lo, double hi) {
  lo = std::max(lo, law.Lower());
  hi = std::min(hi, law.Upper());
  if (!(hi > lo)) return 0.0;
  double total = 0.0;
  if (lo < b) {
    const double top = std::min(b, hi);
    total += phi(a) * (law.Cdf(top) - law.Cdf(lo));
  }
  const double from = std::max(lo, b);
  if (from < hi) {
    std::vector<double> cuts = law.Knots();
    for (double t : phi_knots) cuts.push_back(b + t - a);
    total += IntegrateSplit(
        [&](double w) { return phi(a + w - b) * law.Pdf(w); }, from, hi,
        std::move(cuts));
  }
  return total;
}

// int_{max(lo,b)}^hi f'(a + w - b) dLaw(w) with f the density of `inner` and
// f' its distributional derivative: the smooth slope plus one atom per
// density jump (support edges included).
template <class Law>
double DensitySlopeIntegral(const Law& law, const Distribution& inner,
                            double a, double b, double lo, double hi) {
  const double from = std::max({lo, b, law.Lower()});
  hi = std::min(hi, law.Upper());
  if (!(hi > from)) return 0.0;
  std::vector<double> cuts = law.Knots();
  for (double t : inner.Knots()) cuts.push_back(b + t - a);
  double total = IntegrateSplit(
      [&](double w) { return inner.PdfSlope(a + w - b) * law.Pdf(w); }, from,
      hi, std::move(cuts));
  for (const DensityJump& jump : inner.Jumps()) {
    const double w = jump.at - a + b;
    if (w > from && w < hi) total += jump.size * law.Pdf(w);
  }
  return total;
}

}  // namespace searchduo

#endif  // SEARCHDUO_QUADRATURE_H_
