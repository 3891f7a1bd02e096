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

#ifndef QCRANK_DECODER_H
#define QCRANK_DECODER_H

#include <cstdint>
#include <span>
#include <vector>

#include "qcrank/types.h"

namespace qcrank {

struct BitCounts {
    uint64_t n0 = 0;
    uint64_t n1 = 0;
    bool operator==(const BitCounts &) const = default;
};

/// Counts of one data bit being 0 or 1, per address, summed over every other
/// data bit. The result has 2^n_a entries.
std::vector<BitCounts> marginal_counts(const ShotHistogram &h, uint32_t data_qubit);

/// 2 atan(sqrt(n1 / n0)), with the n0 = 0 limit mapped to exactly pi.
double recover_angle(uint64_t n0, uint64_t n1);

/// Recovered angle for each of the first `length` sequence positions of a
/// QCrank histogram. Positions whose address never appeared are NaN.
std::vector<double> recover_angles(const ShotHistogram &h, size_t length);

/// Per-symbol mean recovered angles and the K - 1 decision thresholds
/// halfway between consecutive means.
struct CalibrationTable {
    uint32_t k = 0;
    std::vector<double> means;
    std::vector<double> thresholds;

    /// Midpoints of consecutive means, sorted so that g() stays a step
    /// function even when noise makes the means non-monotone.
    static CalibrationTable from_means(std::vector<double> means);
    /// Throws std::invalid_argument on size mismatches or unsorted thresholds.
    void validate() const;
    bool operator==(const CalibrationTable &) const = default;
};

/// Thresholds at the midpoints of the noise-free symbol angles.
CalibrationTable ideal_calibration(uint32_t k);

struct LabeledAngle {
    uint64_t symbol;
    double alpha;
};

/// Averages the recovered angles per symbol. NaN angles are skipped.
/// Throws std::invalid_argument if some symbol has no sample.
CalibrationTable fit_calibration(std::span<const LabeledAngle> samples, uint32_t k);

/// Same, starting from known inputs and the histograms they produced.
CalibrationTable fit_calibration(
    std::span<const DataSequence> truths, std::span<const ShotHistogram> runs, uint32_t k);

/// The symbol whose calibration interval contains alpha. Intervals are
/// half-open on the right, so alpha == thresholds[j] maps to j + 1.
/// NaN maps to symbol 0.
uint64_t apply_calibration(double alpha, const CalibrationTable &table);

DataSequence decode_angles(std::span<const double> angles, const CalibrationTable &table);

struct VoteResult {
    DataSequence values;
    /// Positions whose address was never observed; their value is 0.
    std::vector<size_t> missing;
};

/// Most frequent data word per address, ties going to the smallest word.
/// `length` defaults to every address of the layout.
VoteResult majority_vote(const ShotHistogram &h, size_t length = SIZE_MAX);

/// Spread between the mean recovered angles of the first and last symbol,
/// relative to the ideal spread. Not clamped: noise can push it slightly
/// outside [0, 1].
double dynamic_range(std::span<const double> means, uint32_t k);

/// Fraction of positions where the sequences agree.
double rvf(const DataSequence &truth, const DataSequence &recovered);

/// Fraction of trials whose whole sequence was recovered.
double rsf(const std::vector<bool> &per_trial_success);

struct RecoveryReport {
    DataSequence recovered;
    double dynamic_range = 0;
    double rvf = 0;
    double rsf = 0;
    std::vector<size_t> missing;
};

}  // namespace qcrank

#endif
