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

#ifndef SEARCHDUO_DIST_H_
#define SEARCHDUO_DIST_H_

#include <cstdint>
#include <string>
#include <vector>

namespace searchduo {

enum class DistKind { kUniform, kTruncatedExponential, kStep };

// Jump of the density at `at`: f(at+) - f(at-). The support edges 0 and 1
// carry the jumps from and to zero.
struct DensityJump {
  double at;
  double size;
};

struct DistValue {
  double pdf;
  double cdf;
  double dpdf;
};

// A valuation law supported on [0,1]. Immutable after construction.
//
// Step densities are left-continuous: piece k covers (b_{k-1}, b_k], the first
// piece includes 0. The density slope is the right-hand derivative, which is
// zero inside every piece.
class Distribution {
 public:
  static Distribution Uniform();
  // Density rate*exp(-rate*x)/(1-exp(-rate)) on [0,1]. Throws for rate <= 0.
  static Distribution TruncatedExponential(double rate = 1.0);
  // `breaks` strictly ascending inside (0,1), one more density than breaks,
  // all densities positive and integrating to 1 within 1e-12. Throws
  // std::invalid_argument otherwise.
  static Distribution Step(std::vector<double> breaks,
                           std::vector<double> densities);

  DistKind kind() const { return kind_; }
  double rate() const { return rate_; }
  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<double>& densities() const { return densities_; }

  double Pdf(double x) const;
  double Cdf(double x) const;
  double PdfSlope(double x) const;

  // Density limits from either side; differ from Pdf only at breakpoints.
  double PdfLeft(double x) const;
  double PdfRight(double x) const;

  // int_0^x t f(t) dt, clamped to [0,1].
  double PartialMean(double x) const;
  // E[(V - x)^+]; equals mean - x for x <= 0 and 0 for x >= 1.
  double ExpectedExcess(double x) const;
  double Mean() const { return PartialMean(1.0); }
  // Inverse cdf on [0,1].
  double Quantile(double u) const;

  double Lower() const { return 0.0; }
  double Upper() const { return 1.0; }
  // 0, interior breakpoints, 1.
  std::vector<double> Knots() const;
  std::vector<DensityJump> Jumps() const;

  std::string Describe() const;

 private:
  Distribution() = default;
  int Piece(double x) const;

  DistKind kind_ = DistKind::kUniform;
  double rate_ = 0.0;
  double norm_ = 1.0;
  std::vector<double> breaks_;
  std::vector<double> densities_;
  std::vector<double> cdf_at_breaks_;
};

DistValue Evaluate(const Distribution& d, double x);

// Counter-based generator: the k-th draw of stream `stream` under `seed` is a
// pure function of (seed, stream, k), so per-consumer substreams reproduce
// regardless of scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}
  std::uint64_t NextBits();
  // Uniform on [0,1).
  double NextUniform();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

double Sample(const Distribution& d, CounterRng& rng);

}  // namespace searchduo

#endif  // SEARCHDUO_DIST_H_
