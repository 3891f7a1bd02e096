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

#include "qcrank/decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcrank/encoder.h"

namespace qcrank {

std::vector<BitCounts> marginal_counts(const ShotHistogram &h, uint32_t data_qubit) {
    const Layout &layout = h.layout;
    if (data_qubit >= layout.n_d) {
        throw std::out_of_range(
            "data qubit " + std::to_string(data_qubit) + " outside a register of " + std::to_string(layout.n_d));
    }
    if (h.counts.empty()) {
        throw std::invalid_argument("cannot marginalize an empty histogram");
    }
    std::vector<BitCounts> out(size_t{1} << layout.n_a);
    const uint32_t shift = layout.n_d - 1 - data_qubit;
    for (const auto &[bits, n] : h.counts) {
        auto [address, word] = bitstring_split(bits, layout);
        if ((word >> shift) & 1) {
            out[address].n1 += n;
        } else {
            out[address].n0 += n;
        }
    }
    return out;
}

double recover_angle(uint64_t n0, uint64_t n1) {
    if (n0 == 0 && n1 == 0) {
        throw std::invalid_argument("recover_angle needs at least one count");
    }
    if (n0 == 0) {
        return std::numbers::pi;
    }
    return 2 * std::atan(std::sqrt((double)n1 / (double)n0));
}

std::vector<double> recover_angles(const ShotHistogram &h, size_t length) {
    const uint32_t n_a = h.layout.n_a;
    const size_t capacity = (size_t{1} << n_a) * h.layout.n_d;
    if (length > capacity) {
        throw std::invalid_argument(
            "requested " + std::to_string(length) + " positions from a histogram holding " + std::to_string(capacity));
    }
    std::vector<double> out(length, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::vector<BitCounts>> columns;
    for (uint32_t j = 0; j < h.layout.n_d; j++) {
        columns.push_back(marginal_counts(h, j));
    }
    for (size_t p = 0; p < length; p++) {
        GridCell cell = qcrank_cell(p, n_a);
        const BitCounts &bc = columns[cell.data_qubit][cell.address];
        if (bc.n0 + bc.n1 > 0) {
            out[p] = recover_angle(bc.n0, bc.n1);
        }
    }
    return out;
}

CalibrationTable CalibrationTable::from_means(std::vector<double> means) {
    if (means.size() < 2) {
        throw std::invalid_argument("calibration needs at least 2 symbols");
    }
    CalibrationTable t;
    t.k = (uint32_t)means.size();
    t.means = std::move(means);
    for (size_t i = 0; i + 1 < t.means.size(); i++) {
        t.thresholds.push_back((t.means[i] + t.means[i + 1]) / 2);
    }
    std::sort(t.thresholds.begin(), t.thresholds.end());
    return t;
}

void CalibrationTable::validate() const {
    if (k < 2 || means.size() != k || thresholds.size() != k - 1) {
        throw std::invalid_argument("calibration table needs K >= 2, K means and K - 1 thresholds");
    }
    for (double x : means) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("calibration means must be finite");
        }
    }
    if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
        throw std::invalid_argument("calibration thresholds must be nondecreasing");
    }
}

CalibrationTable ideal_calibration(uint32_t k) {
    if (k < 2) {
        throw std::invalid_argument("calibration needs at least 2 symbols");
    }
    std::vector<double> means(k);
    for (uint32_t i = 0; i < k; i++) {
        means[i] = symbol_angle(i, k);
    }
    return CalibrationTable::from_means(std::move(means));
}

CalibrationTable fit_calibration(std::span<const LabeledAngle> samples, uint32_t k) {
    if (k < 2) {
        throw std::invalid_argument("calibration needs at least 2 symbols");
    }
    std::vector<double> sum(k, 0);
    std::vector<uint64_t> count(k, 0);
    for (const auto &s : samples) {
        if (s.symbol >= k) {
            throw std::out_of_range("calibration sample symbol " + std::to_string(s.symbol) + " >= K");
        }
        if (std::isnan(s.alpha)) {
            continue;
        }
        sum[s.symbol] += s.alpha;
        count[s.symbol]++;
    }
    std::vector<double> means(k);
    for (uint32_t i = 0; i < k; i++) {
        if (count[i] == 0) {
            throw std::invalid_argument("no calibration sample for symbol " + std::to_string(i));
        }
        means[i] = sum[i] / (double)count[i];
    }
    return CalibrationTable::from_means(std::move(means));
}

CalibrationTable fit_calibration(
    std::span<const DataSequence> truths, std::span<const ShotHistogram> runs, uint32_t k) {
    if (truths.size() != runs.size()) {
        throw std::invalid_argument("need one histogram per calibration sequence");
    }
    std::vector<LabeledAngle> samples;
    for (size_t r = 0; r < runs.size(); r++) {
        auto angles = recover_angles(runs[r], truths[r].size());
        for (size_t p = 0; p < angles.size(); p++) {
            samples.push_back({truths[r].values[p], angles[p]});
        }
    }
    return fit_calibration(samples, k);
}

uint64_t apply_calibration(double alpha, const CalibrationTable &table) {
    if (std::isnan(alpha)) {
        return 0;
    }
    auto it = std::upper_bound(table.thresholds.begin(), table.thresholds.end(), alpha);
    return (uint64_t)(it - table.thresholds.begin());
}

DataSequence decode_angles(std::span<const double> angles, const CalibrationTable &table) {
    table.validate();
    std::vector<uint64_t> values(angles.size());
    for (size_t i = 0; i < angles.size(); i++) {
        values[i] = apply_calibration(angles[i], table);
    }
    uint32_t depth = (uint32_t)std::bit_width((uint64_t)table.k - 1);
    return DataSequence(std::move(values), depth);
}

VoteResult majority_vote(const ShotHistogram &h, size_t length) {
    const size_t num_addresses = size_t{1} << h.layout.n_a;
    if (length == SIZE_MAX) {
        length = num_addresses;
    }
    if (length > num_addresses) {
        throw std::invalid_argument(
            "requested " + std::to_string(length) + " values from " + std::to_string(num_addresses) + " addresses");
    }
    std::vector<std::map<uint64_t, uint64_t>> tallies(length);
    for (const auto &[bits, n] : h.counts) {
        auto [address, word] = bitstring_split(bits, h.layout);
        if (address < length) {
            tallies[address][word] += n;
        }
    }
    VoteResult out;
    out.values.bit_depth = std::max<uint32_t>(1, h.layout.n_d);
    out.values.values.assign(length, 0);
    for (size_t a = 0; a < length; a++) {
        if (tallies[a].empty()) {
            out.missing.push_back(a);
            continue;
        }
        uint64_t best_word = 0;
        uint64_t best_count = 0;
        for (const auto &[word, n] : tallies[a]) {
            if (n > best_count) {
                best_word = word;
                best_count = n;
            }
        }
        out.values.values[a] = best_word;
    }
    return out;
}

double dynamic_range(std::span<const double> means, uint32_t k) {
    if (k < 2 || means.size() != k) {
        throw std::invalid_argument("dynamic range needs K >= 2 means");
    }
    double span = symbol_angle(k - 1, k) - symbol_angle(0, k);
    return (means[k - 1] - means[0]) / span;
}

double rvf(const DataSequence &truth, const DataSequence &recovered) {
    if (truth.size() != recovered.size()) {
        throw std::invalid_argument(
            "rvf compares sequences of equal length, got " + std::to_string(truth.size()) + " and " +
            std::to_string(recovered.size()));
    }
    if (truth.size() == 0) {
        return 1;
    }
    size_t good = 0;
    for (size_t i = 0; i < truth.size(); i++) {
        good += truth.values[i] == recovered.values[i];
    }
    return (double)good / (double)truth.size();
}

double rsf(const std::vector<bool> &per_trial_success) {
    if (per_trial_success.empty()) {
        throw std::invalid_argument("rsf needs at least one trial");
    }
    size_t good = std::count(per_trial_success.begin(), per_trial_success.end(), true);
    return (double)good / (double)per_trial_success.size();
}

}  // namespace qcrank
