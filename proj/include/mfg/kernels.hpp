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

#ifndef MFG_KERNELS_HPP_
#define MFG_KERNELS_HPP_

#include <cstdint>
#include <string>

namespace mfg::kernels {

// Euler-Maruyama sweep for scalar-state agents under linear feedback:
//
//   cu_k = gain * x_k + offset_k                (the recorded control is -cu)
//   x_{k+1} = x_k + (drift_x*x_k - drift_u*cu_k) * dt
//                 + (diff_x*x_k - diff_u*cu_k + diff_const) * (sqrt_dt * z_k)
//
// z_k is the standard normal at counter (step=k, agent, replication, path
// stream). The operation order above is normative: the scalar and AVX2
// backends execute it identically (no fused multiply-add), so ensembles are
// bitwise equal across backends and the equivalence suite can assert exact
// agreement.
struct ScalarSdeParams {
  double drift_x = 0.0;
  double drift_u = 1.0;
  double diff_x = 0.0;
  double diff_u = 1.0;
  double diff_const = 0.0;
  double gain = 0.0;
  const double* offset = nullptr;  // per fine step; nullptr selects offset_const
  double offset_const = 0.0;
  double dt = 0.0;
  double sqrt_dt = 0.0;
};

// Advances `count` lanes in place from fine step `step_begin` to `step_end`.
// Lane i uses RNG agent id agent_ids[i]; all lanes share one replication id.
using AdvanceFn = void (*)(const ScalarSdeParams& params, double* x,
                           const std::uint32_t* agent_ids, int count,
                           std::uint64_t seed, std::uint32_t replication,
                           std::uint32_t step_begin, std::uint32_t step_end);

enum class Backend { kAuto, kScalar, kAvx2 };

Backend resolve_backend(Backend requested);  // kAuto -> best available
AdvanceFn advance_fn(Backend resolved);
std::string backend_name(Backend resolved);
bool avx2_available();

// Control value at a node, matching the in-kernel arithmetic.
inline double control_at(const ScalarSdeParams& p, double x, std::uint32_t step) {
  const double o = p.offset != nullptr ? p.offset[step] : p.offset_const;
  return 0.0 - (p.gain * x + o);
}

namespace detail {
void advance_scalar(const ScalarSdeParams& params, double* x,
                    const std::uint32_t* agent_ids, int count,
                    std::uint64_t seed, std::uint32_t replication,
                    std::uint32_t step_begin, std::uint32_t step_end);
#if defined(MFG_KERNELS_AVX2_TU)
void advance_avx2(const ScalarSdeParams& params, double* x,
                  const std::uint32_t* agent_ids, int count,
                  std::uint64_t seed, std::uint32_t replication,
                  std::uint32_t step_begin, std::uint32_t step_end);
#endif

// Single-lane step shared by the scalar backend and the AVX2 remainder path.
double step_one(const ScalarSdeParams& p, double x, double z, double offset_k);
}  // namespace detail

}  // namespace mfg::kernels

#endif  // MFG_KERNELS_HPP_
