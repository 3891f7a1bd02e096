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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "oracle.h"
#include "qcrank/statevector.h"

using namespace qcrank;

namespace {

AngleGrid random_grid(uint32_t n_a, uint32_t n_d, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, std::numbers::pi);
    AngleGrid g(n_a, n_d);
    for (size_t i = 0; i < g.num_addresses(); i++) {
        for (uint32_t j = 0; j < n_d; j++) {
            g.set(i, j, u(rng));
        }
    }
    return g;
}

double max_abs_diff(const oracle::Matrix &a, const oracle::Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

oracle::Matrix as_matrix(const std::vector<Amplitude> &column_major, size_t dim) {
    oracle::Matrix m(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        for (size_t r = 0; r < dim; r++) {
            m(r, c) = column_major[c * dim + r];
        }
    }
    return m;
}

}  // namespace

TEST(BuildPucry, MatchesBlockDiagonalWithDefaultShifts) {
    std::mt19937_64 rng(11);
    for (uint32_t n_a = 1; n_a <= 3; n_a++) {
        for (uint32_t n_d = 1; n_d <= 3; n_d++) {
            AngleGrid g = random_grid(n_a, n_d, rng);
            Circuit c = build_pucry(g);
            EXPECT_LT(max_abs_diff(oracle::unitary(c), oracle::ucr_block_diagonal(g)), 1e-10)
                << "n_a=" << n_a << " n_d=" << n_d;
        }
    }
}

TEST(BuildPucry, CollidingShiftsStayCorrect) {
    std::mt19937_64 rng(12);
    AngleGrid g = random_grid(2, 3, rng);
    std::vector<Shift> shifts{{1}, {1}, {0}};
    Circuit c = build_pucry(g, shifts);
    EXPECT_LT(max_abs_diff(oracle::unitary(c), oracle::ucr_block_diagonal(g)), 1e-10);
}

TEST(BuildPucry, LibraryUnitaryAgreesWithOracleProduct) {
    std::mt19937_64 rng(13);
    AngleGrid g = random_grid(2, 2, rng);
    Circuit c = build_pucry(g);
    size_t dim = size_t{1} << c.width();
    EXPECT_LT(max_abs_diff(as_matrix(circuit_unitary(c), dim), oracle::unitary(c)), 1e-12);
}

TEST(BuildPucry, DepthFormula) {
    std::mt19937_64 rng(14);
    for (uint32_t n_a = 1; n_a <= 5; n_a++) {
        for (uint32_t n_d = 1; n_d <= 2 * n_a; n_d++) {
            Circuit c = build_pucry(random_grid(n_a, n_d, rng));
            size_t expected = ((n_d + n_a - 1) / n_a) << n_a;
            EXPECT_EQ(circuit_cx_depth(c), expected) << "n_a=" << n_a << " n_d=" << n_d;
        }
    }
}

TEST(BuildPucry, DefaultShiftsGiveDisjointLayers) {
    std::mt19937_64 rng(15);
    Circuit c = build_pucry(random_grid(3, 3, rng));
    for (const auto &layer : cx_layers(c)) {
        EXPECT_EQ(layer.size(), 3u);
        std::set<QubitIndex> controls;
        for (size_t k : layer) {
            controls.insert(c.gates()[k].qubits[0]);
        }
        EXPECT_EQ(controls.size(), 3u);
    }
}

TEST(BuildPucry, RejectsWrongShiftCount) {
    AngleGrid g(2, 2);
    std::vector<Shift> one{{0}};
    EXPECT_THROW(build_pucry(g, one), std::invalid_argument);
}

TEST(DefaultShifts, CycleThroughAddressQubits) {
    auto s = default_shifts(3, 5);
    EXPECT_EQ(s, (std::vector<Shift>{{0}, {1}, {2}, {0}, {1}}));
}

TEST(SymbolAngle, SpansHalfTurn) {
    EXPECT_DOUBLE_EQ(symbol_angle(0, 8), 0);
    EXPECT_DOUBLE_EQ(symbol_angle(7, 8), std::numbers::pi);
    EXPECT_NEAR(symbol_angle(3, 8), 3 * std::numbers::pi / 7, 1e-15);
    EXPECT_THROW(symbol_angle(8, 8), std::out_of_range);
    EXPECT_THROW(symbol_angle(0, 1), std::invalid_argument);
}

TEST(SymbolMapping, FillsAddressesBeforeDataQubits) {
    EXPECT_EQ(qcrank_cell(0, 2).address, 0u);
    EXPECT_EQ(qcrank_cell(5, 2).address, 1u);
    EXPECT_EQ(qcrank_cell(5, 2).data_qubit, 1u);
    EncodingConfig cfg{2, 2, 4, Encoding::QCrank};
    DataSequence data({0, 1, 2, 3, 3}, 2);
    AngleGrid g = map_symbols_to_angles(data, cfg);
    EXPECT_DOUBLE_EQ(g.at(2, 0), 2 * std::numbers::pi / 3);
    EXPECT_DOUBLE_EQ(g.at(0, 1), std::numbers::pi);
    EXPECT_DOUBLE_EQ(g.at(1, 1), 0);
    DataSequence too_long(std::vector<uint64_t>(9, 0), 2);
    EXPECT_THROW(map_symbols_to_angles(too_long, cfg), std::invalid_argument);
}

TEST(BuildQcrank, StateHasExpectedMarginals) {
    EncodingConfig cfg{2, 3, 5, Encoding::QCrank};
    DataSequence data({4, 0, 3, 1, 2, 2, 0, 4, 1, 3, 4, 0}, 3);
    AngleGrid g = map_symbols_to_angles(data, cfg);
    Circuit prep = qcrank_state_prep(g);
    Eigen::VectorXcd psi = oracle::unitary(prep).col(0);
    const uint32_t w = prep.width();
    for (size_t p = 0; p < data.size(); p++) {
        auto cell = qcrank_cell(p, cfg.n_a);
        double p1 = 0, total = 0;
        for (Eigen::Index b = 0; b < psi.size(); b++) {
            if ((size_t)(b >> (w - cfg.n_a)) != cell.address) {
                continue;
            }
            double pr = std::norm(psi(b));
            total += pr;
            if ((b >> (w - 1 - (cfg.n_a + cell.data_qubit))) & 1) {
                p1 += pr;
            }
        }
        EXPECT_NEAR(total, 0.25, 1e-12);
        double alpha = symbol_angle(data.values[p], cfg.k);
        EXPECT_NEAR(p1 / total, std::pow(std::sin(alpha / 2), 2), 1e-12);
    }
    Circuit full = build_qcrank(data, cfg);
    EXPECT_EQ(full.num_clbits(), 5u);
    EXPECT_EQ(full.layout(), Layout::standard(2, 3));
}

TEST(BuildQbart, SupportIsTheStoredWords) {
    EncodingConfig cfg{3, 4, 0, Encoding::QBArt};
    DataSequence data({9, 0, 15, 6, 1, 8, 3, 12}, 4);
    Circuit prep = qcrank_state_prep(qbart_angles(data, cfg));
    Eigen::VectorXcd psi = oracle::unitary(prep).col(0);
    for (Eigen::Index b = 0; b < psi.size(); b++) {
        size_t address = (size_t)b >> 4;
        uint64_t word = (uint64_t)b & 15;
        double expect = word == data.values[address] ? 1.0 / 8 : 0;
        EXPECT_NEAR(std::norm(psi(b)), expect, 1e-12);
    }
    EXPECT_EQ(circuit_cx_depth(build_qbart(data, cfg)), 16u);
}

TEST(BuildQbart, RejectsOverflow) {
    EncodingConfig cfg{1, 2, 0, Encoding::QBArt};
    EXPECT_THROW(build_qbart(DataSequence({4}, 3), cfg), std::out_of_range);
    EXPECT_THROW(build_qbart(DataSequence({0, 1, 2}, 2), cfg), std::invalid_argument);
}

TEST(EncodingConfig, CapacityAndValidation) {
    EncodingConfig qc{4, 8, 8, Encoding::QCrank};
    EXPECT_EQ(qc.capacity(), 128u);
    EXPECT_EQ(qc.capacity_bits(), 384u);
    EncodingConfig qb{5, 10, 0, Encoding::QBArt};
    EXPECT_EQ(qb.capacity(), 32u);
    EXPECT_EQ(qb.capacity_bits(), 320u);
    EXPECT_THROW((EncodingConfig{0, 1, 2, Encoding::QCrank}.validate()), std::invalid_argument);
    EXPECT_THROW((EncodingConfig{1, 1, 1, Encoding::QCrank}.validate()), std::invalid_argument);
    EXPECT_EQ(parse_encoding("qbart"), Encoding::QBArt);
    EXPECT_EQ(encoding_name(Encoding::QCrank), "qcrank");
    EXPECT_THROW(parse_encoding("frqi"), std::invalid_argument);
}
