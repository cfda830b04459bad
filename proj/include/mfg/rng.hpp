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

#ifndef MFG_RNG_HPP_
#define MFG_RNG_HPP_

#include <array>
#include <cstdint>

namespace mfg::rng {

// Counter-based generator: Philox4x32-10 (Salmon, Moraes, Dror, Shaw 2011).
// Every random variate in the toolkit is a pure function of
// (seed, replication, agent, step, purpose), so results do not depend on
// scheduling or worker count, and common-random-number comparisons between
// two control policies are exact.

struct Counter {
  std::uint32_t w0 = 0;  // step (or component index for initial draws)
  std::uint32_t w1 = 0;  // agent
  std::uint32_t w2 = 0;  // replication
  std::uint32_t w3 = 0;  // purpose / stream tag
};

// Stream tags for Counter::w3.
enum Purpose : std::uint32_t {
  kPathNoise = 0,
  kInitialState = 1,
  kAuditSampling = 2,
  kPopulationSampling = 3,
};

std::array<std::uint32_t, 4> philox4x32(const Counter& ctr, std::uint64_t seed);

// Uniform double in (0,1) from two 32-bit words: 52 random mantissa bits,
// then a half-ulp offset so 0 is never produced. Uses only exact FP ops so
// the SIMD backends can reproduce it bit for bit.
double uniform_open01(std::uint32_t hi, std::uint32_t lo);

// Standard normal via the Acklam inverse-CDF approximation (|error| < 1.2e-9,
// far below Monte Carlo resolution at feasible replication counts). The
// central region |u - 1/2| <= 0.47575 is a fixed-order rational polynomial in
// exact FP ops; both SIMD backends fall back to this scalar routine for tail
// lanes, so all backends generate identical streams.
double normal_from_uniform(double u);

bool uniform_is_central(double u);           // true iff the rational branch applies
double normal_central_branch(double u);      // central branch only (u must be central)

// One standard normal for (seed, ctr): the first two output words feed the
// uniform; the last two are reserved.
double standard_normal(const Counter& ctr, std::uint64_t seed);

}  // namespace mfg::rng

#endif  // MFG_RNG_HPP_
