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

#include "mfg/kernels.hpp"

#include "mfg/rng.hpp"

namespace mfg::kernels::detail {

double step_one(const ScalarSdeParams& p, double x, double z, double offset_k) {
  const double cu = p.gain * x + offset_k;
  const double da = p.drift_x * x;
  const double db = p.drift_u * cu;
  const double drift = da - db;
  const double ca = p.diff_x * x;
  const double cb = p.diff_u * cu;
  const double diff = (ca - cb) + p.diff_const;
  const double w = p.sqrt_dt * z;
  return (x + drift * p.dt) + diff * w;
}

void advance_scalar(const ScalarSdeParams& params, double* x,
                    const std::uint32_t* agent_ids, int count,
                    std::uint64_t seed, std::uint32_t replication,
                    std::uint32_t step_begin, std::uint32_t step_end) {
  for (std::uint32_t k = step_begin; k < step_end; ++k) {
    const double offset_k = params.offset != nullptr ? params.offset[k] : params.offset_const;
    for (int lane = 0; lane < count; ++lane) {
      const rng::Counter ctr{k, agent_ids[lane], replication, rng::kPathNoise};
      const double z = rng::standard_normal(ctr, seed);
      x[lane] = step_one(params, x[lane], z, offset_k);
    }
  }
}

}  // namespace mfg::kernels::detail
