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

#ifndef QCRANK_CIRCUIT_H
#define QCRANK_CIRCUIT_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcrank/types.h"

namespace qcrank {

using QubitIndex = uint32_t;

enum class GateKind : uint8_t { H, X, RY, CX, CCX, RESET, MEASURE };

std::string_view gate_name(GateKind kind);

/// One instruction of a circuit.
///
/// Controls are listed before the target for CX/CCX. `angle` is only
/// meaningful for RY; `clbit` only for MEASURE.
struct Gate {
    GateKind kind;
    uint8_t arity;
    std::array<QubitIndex, 3> qubits;
    double angle;
    uint32_t clbit;

    static Gate h(QubitIndex q);
    static Gate x(QubitIndex q);
    static Gate ry(double theta, QubitIndex q);
    static Gate cx(QubitIndex control, QubitIndex target);
    static Gate ccx(QubitIndex c1, QubitIndex c2, QubitIndex target);
    static Gate reset(QubitIndex q);
    static Gate measure(QubitIndex q, uint32_t clbit);

    std::span<const QubitIndex> targets() const {
        return {qubits.data(), arity};
    }
    bool is_entangling() const {
        return kind == GateKind::CX || kind == GateKind::CCX;
    }
    bool operator==(const Gate &other) const;
};

/// Ordered gate list over a fixed-width register.
///
/// Measurements are terminal: once a MEASURE has been appended only further
/// MEASURE gates are accepted. Every classical bit label is written once.
class Circuit {
   public:
    explicit Circuit(uint32_t width);

    uint32_t width() const {
        return width_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }

    void append(const Gate &gate);
    void h(QubitIndex q) {
        append(Gate::h(q));
    }
    void x(QubitIndex q) {
        append(Gate::x(q));
    }
    void ry(double theta, QubitIndex q) {
        append(Gate::ry(theta, q));
    }
    void cx(QubitIndex c, QubitIndex t) {
        append(Gate::cx(c, t));
    }
    void ccx(QubitIndex c1, QubitIndex c2, QubitIndex t) {
        append(Gate::ccx(c1, c2, t));
    }
    void reset(QubitIndex q) {
        append(Gate::reset(q));
    }
    void measure(QubitIndex q, uint32_t clbit) {
        append(Gate::measure(q, clbit));
    }

    /// Appends every gate of `other`, which must not be wider than this.
    Circuit &operator+=(const Circuit &other);

    /// Number of classical bits (highest label + 1, 0 when nothing is measured).
    uint32_t num_clbits() const;
    /// (qubit, clbit) pairs in append order.
    std::vector<std::pair<QubitIndex, uint32_t>> measurements() const;
    bool has_reset() const;

    /// Interpretation of the measured bit-string. Defaults to Layout::raw.
    const Layout &layout() const {
        return layout_;
    }
    void set_layout(Layout layout);

    /// One gate per line: `RY(<rad>) q<i>`, `CX q<c> q<t>`, `MEASURE q<i> -> c<j>`, ...
    /// The first line is a `QUBITS <width>` header.
    std::string to_text() const;
    static Circuit from_text(std::string_view text);
    /// OpenQASM 2.0 rendering (qelib1 gate names).
    std::string to_qasm() const;

    bool operator==(const Circuit &other) const;

   private:
    uint32_t width_;
    std::vector<Gate> gates_;
    std::vector<bool> clbit_used_;
    bool measuring_ = false;
    Layout layout_;
};

/// Critical-path length counting only CX/CCX layers, using as-soon-as-possible
/// scheduling in gate order. Single-qubit gates, resets and measurements keep
/// their ordering on each wire but do not add depth.
size_t circuit_cx_depth(const Circuit &c);

/// Groups the CX/CCX gates by the layer assigned in circuit_cx_depth.
/// Entry k lists indices into c.gates() scheduled in layer k+1.
std::vector<std::vector<size_t>> cx_layers(const Circuit &c);

}  // namespace qcrank

#endif
