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

#ifndef SEARCHDUO_RIVAL_LAW_H_
#define SEARCHDUO_RIVAL_LAW_H_

#include <vector>

#include "searchduo/dist.h"

namespace searchduo {

// Law of the best net value w = max_j {v_j - P_j} offered by a set of rivals
// with independent valuations and pure prices. cdf G(w) = prod_j F_j(w + P_j)
// on [-max P_j, 1 - min P_j]. A single rival gives the duopoly law.
class NetValueLaw {
 public:
  struct Rival {
    Distribution dist;
    double price;
  };

  // Throws std::invalid_argument when `rivals` is empty.
  explicit NetValueLaw(std::vector<Rival> rivals);

  double Cdf(double w) const;
  double Pdf(double w) const;
  double Lower() const { return lower_; }
  double Upper() const { return upper_; }
  std::vector<double> Knots() const;

  const std::vector<Rival>& rivals() const { return rivals_; }

 private:
  std::vector<Rival> rivals_;
  double lower_;
  double upper_;
};

}  // namespace searchduo

#endif  // SEARCHDUO_RIVAL_LAW_H_
