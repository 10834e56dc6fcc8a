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

#include "searchduo/dist.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace searchduo {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Distribution Distribution::Uniform() {
  Distribution d;
  d.kind_ = DistKind::kUniform;
  return d;
}

Distribution Distribution::TruncatedExponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("truncated exponential rate must be > 0");
  }
  Distribution d;
  d.kind_ = DistKind::kTruncatedExponential;
  d.rate_ = rate;
  d.norm_ = -std::expm1(-rate);
  return d;
}

Distribution Distribution::Step(std::vector<double> breaks,
                                std::vector<double> densities) {
  if (densities.size() != breaks.size() + 1) {
    throw std::invalid_argument(
        "step distribution needs exactly one more density than breakpoints");
  }
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    if (!(breaks[k] > 0.0 && breaks[k] < 1.0)) {
      throw std::invalid_argument("step breakpoints must lie inside (0,1)");
    }
    if (k > 0 && !(breaks[k] > breaks[k - 1])) {
      throw std::invalid_argument("step breakpoints must be strictly ascending");
    }
  }
  double total = 0.0;
  double lo = 0.0;
  for (std::size_t k = 0; k < densities.size(); ++k) {
    if (!(densities[k] > 0.0) || !std::isfinite(densities[k])) {
      throw std::invalid_argument("step densities must be positive");
    }
    const double hi = k < breaks.size() ? breaks[k] : 1.0;
    total += densities[k] * (hi - lo);
    lo = hi;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("step densities must integrate to 1");
  }
  Distribution d;
  d.kind_ = DistKind::kStep;
  d.breaks_ = std::move(breaks);
  d.densities_ = std::move(densities);
  double acc = 0.0;
  lo = 0.0;
  for (std::size_t k = 0; k < d.breaks_.size(); ++k) {
    acc += d.densities_[k] * (d.breaks_[k] - lo);
    d.cdf_at_breaks_.push_back(acc);
    lo = d.breaks_[k];
  }
  return d;
}

int Distribution::Piece(double x) const {
  return static_cast<int>(
      std::lower_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin());
}

double Distribution::Pdf(double x) const {
  if (x < 0.0 || x > 1.0) return 0.0;
  switch (kind_) {
    case DistKind::kUniform:
      return 1.0;
    case DistKind::kTruncatedExponential:
      return rate_ * std::exp(-rate_ * x) / norm_;
    case DistKind::kStep:
      return densities_[Piece(x)];
  }
  return 0.0;
}

double Distribution::PdfLeft(double x) const {
  if (x <= 0.0 || x > 1.0) return 0.0;
  if (kind_ == DistKind::kStep) return densities_[Piece(x)];
  return Pdf(x);
}

double Distribution::PdfRight(double x) const {
  if (x < 0.0 || x >= 1.0) return 0.0;
  if (kind_ == DistKind::kStep) {
    const auto k =
        std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
    return densities_[k];
  }
  return Pdf(x);
}

double Distribution::Cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  switch (kind_) {
    case DistKind::kUniform:
      return x;
    case DistKind::kTruncatedExponential:
      return -std::expm1(-rate_ * x) / norm_;
    case DistKind::kStep: {
      const int k = Piece(x);
      const double base = k == 0 ? 0.0 : cdf_at_breaks_[k - 1];
      const double lo = k == 0 ? 0.0 : breaks_[k - 1];
      return base + densities_[k] * (x - lo);
    }
  }
  return 0.0;
}

double Distribution::PdfSlope(double x) const {
  if (x < 0.0 || x > 1.0) return 0.0;
  if (kind_ == DistKind::kTruncatedExponential) return -rate_ * Pdf(x);
  return 0.0;
}

double Distribution::PartialMean(double x) const {
  if (x <= 0.0) return 0.0;
  x = std::min(x, 1.0);
  switch (kind_) {
    case DistKind::kUniform:
      return 0.5 * x * x;
    case DistKind::kTruncatedExponential: {
      const double lx = rate_ * x;
      return (1.0 - std::exp(-lx) * (1.0 + lx)) / (rate_ * norm_);
    }
    case DistKind::kStep: {
      double acc = 0.0;
      double lo = 0.0;
      for (std::size_t k = 0; k < densities_.size(); ++k) {
        const double hi = std::min(k < breaks_.size() ? breaks_[k] : 1.0, x);
        acc += densities_[k] * 0.5 * (hi * hi - lo * lo);
        if (hi >= x) break;
        lo = hi;
      }
      return acc;
    }
  }
  return 0.0;
}

double Distribution::ExpectedExcess(double x) const {
  if (x >= 1.0) return 0.0;
  const double mean = Mean();
  if (x <= 0.0) return mean - x;
  const double tail = (mean - PartialMean(x)) - x * (1.0 - Cdf(x));
  return std::max(tail, 0.0);
}

double Distribution::Quantile(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  switch (kind_) {
    case DistKind::kUniform:
      return u;
    case DistKind::kTruncatedExponential:
      return std::min(-std::log1p(-u * norm_) / rate_, 1.0);
    case DistKind::kStep: {
      const auto k = std::upper_bound(cdf_at_breaks_.begin(),
                                      cdf_at_breaks_.end(), u) -
                     cdf_at_breaks_.begin();
      const double base = k == 0 ? 0.0 : cdf_at_breaks_[k - 1];
      const double lo = k == 0 ? 0.0 : breaks_[k - 1];
      return std::min(lo + (u - base) / densities_[k], 1.0);
    }
  }
  return u;
}

std::vector<double> Distribution::Knots() const {
  std::vector<double> knots{0.0};
  knots.insert(knots.end(), breaks_.begin(), breaks_.end());
  knots.push_back(1.0);
  return knots;
}

std::vector<DensityJump> Distribution::Jumps() const {
  std::vector<DensityJump> jumps;
  for (double t : Knots()) {
    const double size = PdfRight(t) - PdfLeft(t);
    if (size != 0.0) jumps.push_back({t, size});
  }
  return jumps;
}

std::string Distribution::Describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DistKind::kUniform:
      os << "uniform";
      break;
    case DistKind::kTruncatedExponential:
      os << "truncexp(lambda=" << rate_ << ")";
      break;
    case DistKind::kStep:
      os << "step(breaks=[";
      for (std::size_t k = 0; k < breaks_.size(); ++k) {
        os << (k ? "," : "") << breaks_[k];
      }
      os << "],densities=[";
      for (std::size_t k = 0; k < densities_.size(); ++k) {
        os << (k ? "," : "") << densities_[k];
      }
      os << "])";
      break;
  }
  return os.str();
}

DistValue Evaluate(const Distribution& d, double x) {
  return {d.Pdf(x), d.Cdf(x), d.PdfSlope(x)};
}

std::uint64_t CounterRng::NextBits() {
  const std::uint64_t key =
      SplitMix64(seed_ ^ SplitMix64(stream_ + 0x632be59bd9b4e019ULL));
  return SplitMix64(key + counter_++ * 0xd1b54a32d192ed03ULL);
}

double CounterRng::NextUniform() {
  return static_cast<double>(NextBits() >> 11) * 0x1.0p-53;
}

double Sample(const Distribution& d, CounterRng& rng) {
  return d.Quantile(rng.NextUniform());
}

}  // namespace searchduo
