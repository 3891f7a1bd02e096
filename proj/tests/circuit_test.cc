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

#include "qcrank/circuit.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

using namespace qcrank;

namespace {

Circuit random_circuit(uint32_t width, size_t gates, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 3.14159);
    Circuit c(width);
    for (size_t k = 0; k < gates; k++) {
        uint32_t a = rng() % width;
        uint32_t b = (a + 1 + rng() % (width - 1)) % width;
        uint32_t t = 0;
        while (t == a || t == b) {
            t++;
        }
        switch (rng() % 6) {
            case 0: c.h(a); break;
            case 1: c.x(a); break;
            case 2: c.ry(angle(rng), a); break;
            case 3: c.cx(a, b); break;
            case 4: c.ccx(a, b, t); break;
            default: c.reset(a); break;
        }
    }
    for (uint32_t q = 0; q < width; q++) {
        c.measure(q, width - 1 - q);
    }
    return c;
}

}  // namespace

TEST(Circuit, RejectsBadGates) {
    Circuit c(3);
    EXPECT_THROW(c.h(3), std::out_of_range);
    EXPECT_THROW(c.cx(1, 1), std::invalid_argument);
    EXPECT_THROW(c.ccx(0, 2, 0), std::invalid_argument);
    EXPECT_THROW(c.ry(std::nan(""), 0), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
}

TEST(Circuit, MeasurementsAreTerminal) {
    Circuit c(2);
    c.h(0);
    c.measure(0, 1);
    c.measure(1, 0);
    EXPECT_THROW(c.x(0), std::invalid_argument);
    EXPECT_THROW(c.measure(0, 1), std::invalid_argument);
    EXPECT_EQ(c.num_clbits(), 2u);
    auto m = c.measurements();
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0], (std::pair<QubitIndex, uint32_t>{0, 1}));
}

TEST(Circuit, TextRoundTripIsExact) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Circuit c = random_circuit(4, 40, seed);
        Circuit back = Circuit::from_text(c.to_text());
        EXPECT_EQ(back, c) << c.to_text();
    }
}

TEST(Circuit, TextFormat) {
    Circuit c(3);
    c.ry(0.5, 1);
    c.ccx(0, 1, 2);
    c.measure(2, 0);
    EXPECT_EQ(c.to_text(), "# qubits 3\nRY(0.5) q1\nCCX q0 q1 q2\nMEASURE q2 -> c0\n");
}

TEST(Circuit, FromTextReportsLine) {
    try {
        Circuit::from_text("H q0\nFOO q1\n");
        FAIL() << "expected a parse error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(Circuit::from_text("RY(abc) q0\n"), std::invalid_argument);
    EXPECT_THROW(Circuit::from_text("CX q0\n"), std::invalid_argument);
    EXPECT_THROW(Circuit::from_text("H q0 q1\n"), std::invalid_argument);
}

TEST(Circuit, FromTextInfersWidth) {
    Circuit c = Circuit::from_text("# a comment\n\nCX q0 q4\n");
    EXPECT_EQ(c.width(), 5u);
}

TEST(Circuit, Qasm) {
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    c.reset(1);
    c.measure(0, 0);
    EXPECT_EQ(
        c.to_qasm(),
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[1];\n"
        "h q[0];\ncx q[0],q[1];\nreset q[1];\nmeasure q[0] -> c[0];\n");
}

TEST(Circuit, AppendCircuit) {
    Circuit a(3), b(2);
    a.x(2);
    b.cx(0, 1);
    a += b;
    EXPECT_EQ(a.size(), 2u);
    EXPECT_THROW(b += a, std::invalid_argument);
}

TEST(CxDepth, CountsOnlyEntanglingGates) {
    Circuit c(4);
    c.h(0);
    c.ry(1, 1);
    EXPECT_EQ(circuit_cx_depth(c), 0u);
    c.cx(0, 1);
    c.cx(2, 3);
    EXPECT_EQ(circuit_cx_depth(c), 1u);
    c.cx(1, 2);
    c.ccx(0, 1, 3);
    EXPECT_EQ(circuit_cx_depth(c), 3u);
}

TEST(CxLayers, LayersHaveDisjointQubits) {
    Circuit c = random_circuit(5, 200, 7);
    auto layers = cx_layers(c);
    EXPECT_EQ(layers.size(), circuit_cx_depth(c));
    size_t counted = 0;
    for (const auto &layer : layers) {
        std::set<QubitIndex> used;
        for (size_t k : layer) {
            for (auto q : c.gates()[k].targets()) {
                EXPECT_TRUE(used.insert(q).second);
            }
        }
        counted += layer.size();
    }
    size_t entangling = 0;
    for (const auto &g : c.gates()) {
        entangling += g.is_entangling();
    }
    EXPECT_EQ(counted, entangling);
}
