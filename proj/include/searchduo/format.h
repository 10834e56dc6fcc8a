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

#ifndef SEARCHDUO_FORMAT_H_
#define SEARCHDUO_FORMAT_H_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace searchduo {

inline constexpr int kOutputDigits = 12;

// Fixed 12-significant-digit rendering used by every text artifact.
inline std::string FormatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*g", kOutputDigits, x == 0.0 ? 0.0 : x);
  return buf;
}

// Value rounded to 12 significant digits, so that a shortest round-trip
// printer emits at most 12 digits.
inline double RoundOutput(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(FormatNumber(x).c_str(), nullptr);
}

}  // namespace searchduo

#endif  // SEARCHDUO_FORMAT_H_
