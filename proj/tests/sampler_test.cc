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

#include "qcrank/sampler.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "oracle.h"
#include "qcrank/encoder.h"

using namespace qcrank;

namespace {

// Much noisier than any builtin model so every channel leaves a visible mark.
NoiseModel harsh() {
    return NoiseModel{"harsh", 0.03, 0.05, 0.12, 6, 3};
}

Circuit small_qcrank() {
    EncodingConfig cfg{2, 2, 4, Encoding::QCrank};
    return build_qcrank(DataSequence({3, 1, 0, 2, 1, 3, 2, 0}, 2), cfg);
}

Circuit reset_circuit() {
    Circuit c(4);
    c.h(0);
    c.ry(1.1, 1);
    c.cx(0, 2);
    c.ccx(0, 1, 3);
    c.reset(2);
    c.ry(0.4, 2);
    c.cx(3, 2);
    c.reset(0);
    c.h(0);
    for (uint32_t q = 0; q < 4; q++) {
        c.measure(q, 3 - q);
    }
    return c;
}

void expect_converges(const Circuit &c, const NoiseModel &noise, uint64_t seed) {
    const uint64_t shots = 100000;
    auto expect = oracle::noisy_distribution(c, noise);
    auto h = sample(c, shots, noise, seed, SampleOptions{.threads = 2});
    EXPECT_EQ(h.total(), shots);
    std::set<std::string> keys;
    for (const auto &[k, _] : expect) {
        keys.insert(k);
    }
    for (const auto &[k, _] : h.counts) {
        keys.insert(k);
    }
    double tv = 0;
    for (const auto &k : keys) {
        double p = expect.count(k) ? expect.at(k) : 0;
        double f = h.counts.count(k) ? (double)h.counts.at(k) / shots : 0;
        EXPECT_NEAR(f, p, 0.01) << k;
        tv += std::abs(f - p) / 2;
    }
    EXPECT_LT(tv, 0.02);
}

}  // namespace

TEST(ShotRng, StreamsAreReproducibleAndDistinct) {
    ShotRng a(5, 0), b(5, 0), c(5, 1), d(6, 0);
    uint64_t x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
    EXPECT_NE(x, d.next_u64());
}

TEST(ShotRng, UniformAndBelowStayInRange) {
    ShotRng r(1, 2);
    double sum = 0;
    for (int i = 0; i < 100000; i++) {
        double u = r.uniform();
        ASSERT_GE(u, 0);
        ASSERT_LT(u, 1);
        sum += u;
        ASSERT_LT(r.below(16), 16u);
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Sample, IdealBellPairIsPerfectlyCorrelated) {
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    c.measure(0, 0);
    c.measure(1, 1);
    auto h = sample(c, 20000, NoiseModel{}, 3);
    EXPECT_EQ(h.counts.size(), 2u);
    EXPECT_NEAR((double)h.counts["00"] / 20000, 0.5, 0.02);
    EXPECT_EQ(h.layout, Layout::raw(2));
}

TEST(Sample, ConvergesToDensityMatrixIdeal) {
    expect_converges(small_qcrank(), NoiseModel{}, 1);
}

TEST(Sample, ConvergesToDensityMatrixUnderNoise) {
    expect_converges(small_qcrank(), harsh(), 2);
}

TEST(Sample, ConvergesWithMidCircuitResets) {
    expect_converges(reset_circuit(), harsh(), 3);
    expect_converges(reset_circuit(), NoiseModel{}, 4);
}

TEST(Sample, ConvergesForEachBuiltinModel) {
    for (const auto &m : builtin_noise_models()) {
        expect_converges(reset_circuit(), m, 5);
    }
}

TEST(Sample, DampingOnlyAndDepolarizingOnly) {
    expect_converges(small_qcrank(), NoiseModel{"amp", 0, 0, 0, 2, 1.5}, 6);
    expect_converges(small_qcrank(), NoiseModel{"dep", 0, 0.2, 0.3}, 7);
    expect_converges(small_qcrank(), NoiseModel{"spam", 0.1}, 8);
}

TEST(Sample, ThreadCountDoesNotChangeResult) {
    for (const auto &m : {NoiseModel{}, harsh()}) {
        auto one = sample(reset_circuit(), 5000, m, 9, SampleOptions{.threads = 1});
        auto three = sample(reset_circuit(), 5000, m, 9, SampleOptions{.threads = 3});
        auto many = sample(reset_circuit(), 5000, m, 9, SampleOptions{.threads = 8});
        EXPECT_EQ(one, three);
        EXPECT_EQ(one, many);
    }
}

TEST(Sample, CheckpointBudgetDoesNotChangeResult) {
    Circuit c = small_qcrank();
    auto full = sample(c, 4000, harsh(), 10);
    auto tight = sample(c, 4000, harsh(), 10, SampleOptions{.checkpoint_budget_bytes = 1});
    EXPECT_EQ(full, tight);
}

TEST(Sample, SeedSelectsStream) {
    Circuit c = small_qcrank();
    EXPECT_EQ(sample(c, 3000, harsh(), 11), sample(c, 3000, harsh(), 11));
    EXPECT_NE(sample(c, 3000, harsh(), 11), sample(c, 3000, harsh(), 12));
}

TEST(Sample, KeepsCircuitLayout) {
    Circuit c = small_qcrank();
    auto h = sample(c, 10, NoiseModel{}, 1);
    EXPECT_EQ(h.layout, Layout::standard(2, 2));
}

TEST(Sample, RejectsBadInput) {
    Circuit c = small_qcrank();
    EXPECT_THROW(sample(c, 0, NoiseModel{}, 1), std::invalid_argument);
    EXPECT_THROW(sample(c, 10, NoiseModel{"bad", 2}, 1), std::invalid_argument);
    EXPECT_THROW(sample(Circuit(27), 10, NoiseModel{}, 1), std::invalid_argument);
    Circuit mismatched(2);
    mismatched.measure(0, 0);
    mismatched.set_layout(Layout::standard(1, 1));
    EXPECT_THROW(sample(mismatched, 10, NoiseModel{}, 1), std::invalid_argument);
}
