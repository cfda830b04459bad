// Copyright 2026 The mfg-noise-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mfg/rng.hpp"

#include <bit>
#include <cmath>

namespace mfg::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t n0 = hi1 ^ c[1] ^ k0;
  const std::uint32_t n2 = hi0 ^ c[3] ^ k1;
  c[0] = n0;
  c[1] = lo1;
  c[2] = n2;
  c[3] = lo0;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const Counter& ctr, std::uint64_t seed) {
  std::uint32_t c[4] = {ctr.w0, ctr.w1, ctr.w2, ctr.w3};
  std::uint32_t k0 = static_cast<std::uint32_t>(seed);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
  for (int round = 0; round < 10; ++round) {
    philox_round(c, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return {c[0], c[1], c[2], c[3]};
}

double uniform_open01(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  // Place 52 random bits in the mantissa of a double in [1,2), subtract 1.
  const std::uint64_t mantissa = bits >> 12;
  const double in_one_two = std::bit_cast<double>(0x3FF0000000000000ull | mantissa);
  return (in_one_two - 1.0) + 0x1p-53;
}

namespace {

// Acklam's rational approximations for the inverse normal CDF.
constexpr double kA1 = -3.969683028665376e+01;
constexpr double kA2 = 2.209460984245205e+02;
constexpr double kA3 = -2.759285104469687e+02;
constexpr double kA4 = 1.383577518672690e+02;
constexpr double kA5 = -3.066479806614716e+01;
constexpr double kA6 = 2.506628277459239e+00;

constexpr double kB1 = -5.447609879822406e+01;
constexpr double kB2 = 1.615858368580409e+02;
constexpr double kB3 = -1.556989798598866e+02;
constexpr double kB4 = 6.680131188771972e+01;
constexpr double kB5 = -1.328068155288572e+01;

constexpr double kC1 = -7.784894002430293e-03;
constexpr double kC2 = -3.223964580411365e-01;
constexpr double kC3 = -2.400758277161838e+00;
constexpr double kC4 = -2.549732539343734e+00;
constexpr double kC5 = 4.374664141464968e+00;
constexpr double kC6 = 2.938163982698783e+00;

constexpr double kD1 = 7.784695709041462e-03;
constexpr double kD2 = 3.224671290700398e-01;
constexpr double kD3 = 2.445134137142996e+00;
constexpr double kD4 = 3.754408661907416e+00;

constexpr double kPLow = 0.02425;
constexpr double kPHigh = 1.0 - kPLow;

inline double tail_branch(double p) {
  // p in (0, kPLow]: lower-tail formula; callers mirror for the upper tail.
  const double q = std::sqrt(-2.0 * std::log(p));
  const double num = ((((kC1 * q + kC2) * q + kC3) * q + kC4) * q + kC5) * q + kC6;
  const double den = (((kD1 * q + kD2) * q + kD3) * q + kD4) * q + 1.0;
  return num / den;
}

}  // namespace

bool uniform_is_central(double u) { return u >= kPLow && u <= kPHigh; }

double normal_central_branch(double u) {
  const double q = u - 0.5;
  const double r = q * q;
  const double num = ((((kA1 * r + kA2) * r + kA3) * r + kA4) * r + kA5) * r + kA6;
  const double den = ((((kB1 * r + kB2) * r + kB3) * r + kB4) * r + kB5) * r + 1.0;
  return (num / den) * q;
}

double normal_from_uniform(double u) {
  if (u < kPLow) return tail_branch(u);
  if (u > kPHigh) return -tail_branch(1.0 - u);
  return normal_central_branch(u);
}

double standard_normal(const Counter& ctr, std::uint64_t seed) {
  const auto words = philox4x32(ctr, seed);
  return normal_from_uniform(uniform_open01(words[0], words[1]));
}

}  // namespace mfg::rng
