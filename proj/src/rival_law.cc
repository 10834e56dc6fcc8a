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

#include "searchduo/rival_law.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace searchduo {

NetValueLaw::NetValueLaw(std::vector<Rival> rivals)
    : rivals_(std::move(rivals)) {
  if (rivals_.empty()) {
    throw std::invalid_argument("net value law needs at least one rival");
  }
  // G is positive once every factor is, and reaches one once every factor
  // does, so the effective support is [-min P_j, 1 - min P_j].
  lower_ = -rivals_.front().price;
  upper_ = 1.0 - rivals_.front().price;
  for (const Rival& r : rivals_) {
    lower_ = std::max(lower_, -r.price);
    upper_ = std::max(upper_, 1.0 - r.price);
  }
}

double NetValueLaw::Cdf(double w) const {
  double g = 1.0;
  for (const Rival& r : rivals_) g *= r.dist.Cdf(w + r.price);
  return g;
}

double NetValueLaw::Pdf(double w) const {
  double total = 0.0;
  for (std::size_t k = 0; k < rivals_.size(); ++k) {
    double term = rivals_[k].dist.Pdf(w + rivals_[k].price);
    if (term == 0.0) continue;
    for (std::size_t m = 0; m < rivals_.size(); ++m) {
      if (m != k) term *= rivals_[m].dist.Cdf(w + rivals_[m].price);
    }
    total += term;
  }
  return total;
}

std::vector<double> NetValueLaw::Knots() const {
  std::vector<double> knots;
  for (const Rival& r : rivals_) {
    for (double t : r.dist.Knots()) knots.push_back(t - r.price);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

}  // namespace searchduo
