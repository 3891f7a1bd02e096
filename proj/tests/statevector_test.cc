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

#include "qcrank/statevector.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracle.h"

using namespace qcrank;

namespace {

Circuit random_unitary_circuit(uint32_t width, size_t gates, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-3, 3);
    Circuit c(width);
    for (size_t k = 0; k < gates; k++) {
        uint32_t a = rng() % width;
        uint32_t b = (a + 1 + rng() % (width - 1)) % width;
        uint32_t t = 0;
        while (t == a || t == b) {
            t++;
        }
        switch (rng() % 5) {
            case 0: c.h(a); break;
            case 1: c.x(a); break;
            case 2: c.ry(angle(rng), a); break;
            case 3: c.cx(a, b); break;
            default: c.ccx(a, b, t); break;
        }
    }
    return c;
}

}  // namespace

TEST(StateVector, StartsInZero) {
    StateVector sv(3);
    EXPECT_EQ(sv.dim(), 8u);
    EXPECT_EQ(sv[0], Amplitude(1, 0));
    EXPECT_DOUBLE_EQ(sv.norm_squared(), 1);
    EXPECT_THROW(StateVector(0), std::invalid_argument);
    EXPECT_THROW(StateVector(2, std::vector<Amplitude>(3)), std::invalid_argument);
}

TEST(StateVector, QubitZeroIsMostSignificant) {
    StateVector sv(3);
    sv.apply_x(0);
    EXPECT_EQ(sv[4], Amplitude(1, 0));
    EXPECT_EQ(sv.mask(2), 1u);
}

TEST(StateVector, RandomCircuitsMatchGateProduct) {
    for (uint64_t seed = 0; seed < 20; seed++) {
        Circuit c = random_unitary_circuit(4, 30, seed);
        StateVector sv = statevector(c);
        Eigen::VectorXcd expect = oracle::unitary(c).col(0);
        for (size_t i = 0; i < sv.dim(); i++) {
            EXPECT_NEAR(std::abs(sv[i] - expect((Eigen::Index)i)), 0, 1e-12) << "seed " << seed;
        }
    }
}

TEST(StateVector, PauliYAndZ) {
    StateVector sv(1);
    sv.apply_h(0);
    sv.apply_z(0);
    EXPECT_NEAR(sv[1].real(), -std::sqrt(0.5), 1e-15);
    StateVector y(1);
    y.apply_y(0);
    EXPECT_EQ(y[1], Amplitude(0, 1));
}

TEST(StateVector, WeightOne) {
    StateVector sv(2);
    sv.apply_ry(1.0, 1);
    EXPECT_NEAR(sv.weight_one(1), std::pow(std::sin(0.5), 2), 1e-15);
    EXPECT_NEAR(sv.weight_one(0), 0, 1e-15);
}

TEST(StateVector, CollapseResetKeepsBranch) {
    StateVector sv(2);
    sv.apply_h(0);
    sv.apply_cx(0, 1);
    sv.collapse_reset(0, true);
    EXPECT_NEAR(std::norm(sv[1]), 0.5, 1e-15);
    EXPECT_NEAR(sv.norm_squared(), 0.5, 1e-15);
}

TEST(StateVector, MergeResetPreservesOtherMarginals) {
    StateVector sv(3);
    sv.apply_ry(0.7, 0);
    sv.apply_cx(0, 1);
    sv.apply_h(2);
    auto before = sv.probabilities();
    sv.merge_reset(0);
    EXPECT_NEAR(sv.weight_one(0), 0, 1e-15);
    for (size_t low = 0; low < 4; low++) {
        EXPECT_NEAR(sv.probabilities()[low], before[low] + before[low + 4], 1e-15);
    }
}

TEST(StateVector, ResetFollowedByPermutationsMatchesDensityMatrix) {
    Circuit c(4);
    c.h(0);
    c.h(1);
    c.cx(0, 2);
    c.ccx(0, 1, 3);
    c.reset(2);
    c.ccx(3, 1, 2);
    c.x(0);
    c.reset(3);
    for (uint32_t q = 0; q < 4; q++) {
        c.measure(q, q);
    }
    auto expect = oracle::noisy_distribution(c, NoiseModel{});
    auto probs = statevector(c).probabilities();
    for (size_t b = 0; b < probs.size(); b++) {
        std::string bits;
        for (int q = 0; q < 4; q++) {
            bits += ((b >> (3 - q)) & 1) ? '1' : '0';
        }
        double e = expect.count(bits) ? expect.at(bits) : 0;
        EXPECT_NEAR(probs[b], e, 1e-12) << bits;
    }
}

TEST(CircuitUnitary, RejectsNonUnitaryAndWide) {
    Circuit r(2);
    r.reset(0);
    EXPECT_THROW(circuit_unitary(r), std::invalid_argument);
    EXPECT_THROW(circuit_unitary(Circuit(15)), std::invalid_argument);
    StateVector sv(1);
    EXPECT_THROW(sv.apply(Gate::reset(0)), std::invalid_argument);
}
