// Copyright 2026 The QCrank Authors
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

#ifndef QCRANK_SAMPLER_H
#define QCRANK_SAMPLER_H

#include <cstdint>

#include "qcrank/circuit.h"
#include "qcrank/noise.h"
#include "qcrank/types.h"

namespace qcrank {

/// Counter-based generator: shot s of a run seeded with `seed` always sees
/// the same stream, independent of how shots are spread over threads.
class ShotRng {
   public:
    ShotRng(uint64_t seed, uint64_t stream);

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [0, n).
    uint64_t below(uint64_t n);

   private:
    uint64_t state_;
};

struct SampleOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Upper bound on memory spent caching the event-free trajectory.
    size_t checkpoint_budget_bytes = size_t{256} << 20;
};

/// Runs `shots` trajectories of `c` under `noise` and counts the measured
/// bit-strings. Resets are sampled (measure, then flip to |0>). The result
/// is a pure function of (c, shots, noise, seed).
ShotHistogram sample(
    const Circuit &c, uint64_t shots, const NoiseModel &noise, uint64_t seed, const SampleOptions &options = {});

}  // namespace qcrank

#endif
