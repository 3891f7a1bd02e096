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

#include "qcrank/pipeline.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace qcrank {

DataSequence random_sequence(size_t length, uint64_t num_symbols, uint32_t bit_depth, uint64_t seed) {
    if (num_symbols < 1) {
        throw std::invalid_argument("need at least one symbol");
    }
    ShotRng rng(seed, 0x5eed);
    std::vector<uint64_t> values(length);
    for (auto &v : values) {
        v = rng.below(num_symbols);
    }
    return DataSequence(std::move(values), bit_depth);
}

DataSequence balanced_sequence(const EncodingConfig &cfg, uint64_t seed) {
    cfg.validate();
    const size_t n = cfg.capacity();
    std::vector<uint64_t> values(n);
    for (size_t i = 0; i < n; i++) {
        values[i] = i % cfg.k;
    }
    ShotRng rng(seed, 0xba1a);
    for (size_t i = n; i > 1; i--) {
        std::swap(values[i - 1], values[rng.below(i)]);
    }
    return DataSequence(std::move(values), (uint32_t)std::bit_width((uint64_t)cfg.k - 1));
}

QCrankRun run_qcrank(
    const DataSequence &data,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const SampleOptions &options) {
    Circuit c = build_qcrank(data, cfg);
    QCrankRun run;
    run.histogram = sample(c, shots, noise, seed, options);
    run.angles = recover_angles(run.histogram, data.size());
    return run;
}

CalibrationTable calibrate_qcrank(
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    size_t circuits,
    const SampleOptions &options) {
    if (circuits < 1) {
        throw std::invalid_argument("calibration needs at least one circuit");
    }
    std::vector<LabeledAngle> samples;
    for (size_t r = 0; r < circuits; r++) {
        ShotRng derive(seed, 0xca1 + r);
        DataSequence truth = balanced_sequence(cfg, derive.next_u64());
        QCrankRun run = run_qcrank(truth, cfg, noise, shots, derive.next_u64(), options);
        for (size_t p = 0; p < truth.size(); p++) {
            samples.push_back({truth.values[p], run.angles[p]});
        }
    }
    return fit_calibration(samples, cfg.k);
}

QBArtRun run_qbart(
    const DataSequence &data,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const SampleOptions &options) {
    Circuit c = build_qbart(data, cfg);
    QBArtRun run;
    run.histogram = sample(c, shots, noise, seed, options);
    run.vote = majority_vote(run.histogram, data.size());
    return run;
}

}  // namespace qcrank
