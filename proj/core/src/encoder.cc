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

#include "qcrank/encoder.h"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcrank {

std::string_view encoding_name(Encoding e) {
    return e == Encoding::QCrank ? "qcrank" : "qbart";
}

Encoding parse_encoding(std::string_view name) {
    if (name == "qcrank") {
        return Encoding::QCrank;
    }
    if (name == "qbart") {
        return Encoding::QBArt;
    }
    throw std::invalid_argument("unknown encoding '" + std::string(name) + "' (expected qcrank or qbart)");
}

void EncodingConfig::validate() const {
    if (n_a < 1 || n_d < 1) {
        throw std::invalid_argument("encoding needs n_a >= 1 and n_d >= 1");
    }
    if (n_a > 24 || n_d > 63) {
        throw std::invalid_argument("encoding register too large");
    }
    if (mode == Encoding::QCrank && k < 2) {
        throw std::invalid_argument("QCrank needs at least K=2 symbols");
    }
}

size_t EncodingConfig::capacity() const {
    return mode == Encoding::QCrank ? num_addresses() * n_d : num_addresses();
}

size_t EncodingConfig::capacity_bits() const {
    if (mode == Encoding::QBArt) {
        return num_addresses() * n_d;
    }
    size_t bits_per_value = std::bit_width(uint64_t{k} - 1);
    return capacity() * bits_per_value;
}

std::vector<Shift> default_shifts(uint32_t n_a, uint32_t n_d) {
    std::vector<Shift> out(n_d);
    for (uint32_t j = 0; j < n_d; j++) {
        out[j] = Shift{j % n_a};
    }
    return out;
}

Circuit build_pucry(const AngleGrid &angles, std::span<const Shift> shifts) {
    const uint32_t n_a = angles.n_a();
    const uint32_t n_d = angles.n_d();
    if (shifts.size() != n_d) {
        throw std::invalid_argument(
            "need one shift per data qubit (" + std::to_string(n_d) + "), got " + std::to_string(shifts.size()));
    }
    std::vector<std::vector<double>> thetas(n_d);
    std::vector<std::vector<QubitIndex>> controls(n_d);
    for (uint32_t j = 0; j < n_d; j++) {
        auto column = angles.column(j);
        thetas[j] = alphas_to_thetas(column, shifts[j]);
        controls[j] = cx_control_sequence(n_a, shifts[j]);
    }

    Circuit c(n_a + n_d);
    const size_t steps = angles.num_addresses();
    for (uint32_t first = 0; first < n_d; first += n_a) {
        uint32_t last = std::min(n_d, first + n_a);
        for (size_t k = 0; k < steps; k++) {
            for (uint32_t j = first; j < last; j++) {
                QubitIndex data_q = n_a + j;
                c.ry(thetas[j][k], data_q);
                c.cx(controls[j][k], data_q);
            }
        }
    }
    return c;
}

Circuit build_pucry(const AngleGrid &angles) {
    auto shifts = default_shifts(angles.n_a(), angles.n_d());
    return build_pucry(angles, shifts);
}

double symbol_angle(uint64_t value, uint32_t k) {
    if (k < 2) {
        throw std::invalid_argument("symbol alphabet needs K >= 2");
    }
    if (value >= k) {
        throw std::out_of_range("symbol " + std::to_string(value) + " outside alphabet of size " + std::to_string(k));
    }
    if (value == k - 1) {
        return std::numbers::pi;
    }
    return std::numbers::pi * (double)value / (double)(k - 1);
}

GridCell qcrank_cell(size_t position, uint32_t n_a) {
    size_t n = size_t{1} << n_a;
    return GridCell{position % n, (uint32_t)(position / n)};
}

AngleGrid map_symbols_to_angles(const DataSequence &data, const EncodingConfig &cfg) {
    cfg.validate();
    if (data.size() > cfg.num_addresses() * cfg.n_d) {
        throw std::invalid_argument(
            "sequence of length " + std::to_string(data.size()) + " exceeds capacity " +
            std::to_string(cfg.num_addresses() * cfg.n_d));
    }
    AngleGrid grid(cfg.n_a, cfg.n_d);
    for (size_t p = 0; p < data.size(); p++) {
        auto cell = qcrank_cell(p, cfg.n_a);
        grid.set(cell.address, cell.data_qubit, symbol_angle(data.values[p], cfg.k));
    }
    return grid;
}

Circuit qcrank_state_prep(const AngleGrid &angles) {
    Circuit c(angles.n_a() + angles.n_d());
    for (uint32_t q = 0; q < angles.n_a(); q++) {
        c.h(q);
    }
    c += build_pucry(angles);
    return c;
}

static void measure_all(Circuit &c, uint32_t n_a, uint32_t n_d) {
    for (uint32_t q = 0; q < n_a + n_d; q++) {
        c.measure(q, q);
    }
    c.set_layout(Layout::standard(n_a, n_d));
}

Circuit build_qcrank(const DataSequence &data, const EncodingConfig &cfg) {
    EncodingConfig qc = cfg;
    qc.mode = Encoding::QCrank;
    auto grid = map_symbols_to_angles(data, qc);
    Circuit c = qcrank_state_prep(grid);
    measure_all(c, cfg.n_a, cfg.n_d);
    return c;
}

AngleGrid qbart_angles(const DataSequence &data, const EncodingConfig &cfg) {
    if (cfg.n_a < 1 || cfg.n_d < 1 || cfg.n_a > 24 || cfg.n_d > 63) {
        throw std::invalid_argument("QBArt needs 1 <= n_a <= 24 and 1 <= n_d <= 63");
    }
    if (data.size() > cfg.num_addresses()) {
        throw std::invalid_argument(
            "sequence of length " + std::to_string(data.size()) + " exceeds " +
            std::to_string(cfg.num_addresses()) + " addresses");
    }
    AngleGrid grid(cfg.n_a, cfg.n_d);
    for (size_t i = 0; i < data.size(); i++) {
        uint64_t v = data.values[i];
        if ((v >> cfg.n_d) != 0) {
            throw std::out_of_range("value " + std::to_string(v) + " overflows " + std::to_string(cfg.n_d) + " data qubits");
        }
        for (uint32_t j = 0; j < cfg.n_d; j++) {
            if ((v >> (cfg.n_d - 1 - j)) & 1) {
                grid.set(i, j, std::numbers::pi);
            }
        }
    }
    return grid;
}

Circuit build_qbart(const DataSequence &data, const EncodingConfig &cfg) {
    auto grid = qbart_angles(data, cfg);
    Circuit c = qcrank_state_prep(grid);
    measure_all(c, cfg.n_a, cfg.n_d);
    return c;
}

}  // namespace qcrank
