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

#ifndef QCRANK_PIPELINE_H
#define QCRANK_PIPELINE_H

#include <cstdint>
#include <vector>

#include "qcrank/decoder.h"
#include "qcrank/encoder.h"
#include "qcrank/noise.h"
#include "qcrank/sampler.h"
#include "qcrank/types.h"

namespace qcrank {

/// `length` values drawn uniformly from [0, num_symbols).
DataSequence random_sequence(size_t length, uint64_t num_symbols, uint32_t bit_depth, uint64_t seed);

/// A full-capacity QCrank sequence in which every symbol appears equally
/// often (up to rounding), in random order.
DataSequence balanced_sequence(const EncodingConfig &cfg, uint64_t seed);

struct QCrankRun {
    ShotHistogram histogram;
    /// Recovered angle per sequence position.
    std::vector<double> angles;
};

/// Encode, sample and recover the angles of one QCrank circuit.
QCrankRun run_qcrank(
    const DataSequence &data,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const SampleOptions &options = {});

/// Fits a calibration table on `circuits` balanced random sequences run
/// under `noise`. Seeds are derived from `seed`.
CalibrationTable calibrate_qcrank(
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    size_t circuits,
    const SampleOptions &options = {});

struct QBArtRun {
    ShotHistogram histogram;
    VoteResult vote;
};

QBArtRun run_qbart(
    const DataSequence &data,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const SampleOptions &options = {});

}  // namespace qcrank

#endif
