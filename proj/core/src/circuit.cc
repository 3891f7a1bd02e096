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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qcrank {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::RY:
            return "RY";
        case GateKind::CX:
            return "CX";
        case GateKind::CCX:
            return "CCX";
        case GateKind::RESET:
            return "RESET";
        case GateKind::MEASURE:
            return "MEASURE";
    }
    return "?";
}

static Gate make(GateKind kind, uint8_t arity, std::array<QubitIndex, 3> qubits) {
    return Gate{kind, arity, qubits, 0.0, 0};
}

Gate Gate::h(QubitIndex q) {
    return make(GateKind::H, 1, {q, 0, 0});
}
Gate Gate::x(QubitIndex q) {
    return make(GateKind::X, 1, {q, 0, 0});
}
Gate Gate::ry(double theta, QubitIndex q) {
    Gate g = make(GateKind::RY, 1, {q, 0, 0});
    g.angle = theta;
    return g;
}
Gate Gate::cx(QubitIndex control, QubitIndex target) {
    return make(GateKind::CX, 2, {control, target, 0});
}
Gate Gate::ccx(QubitIndex c1, QubitIndex c2, QubitIndex target) {
    return make(GateKind::CCX, 3, {c1, c2, target});
}
Gate Gate::reset(QubitIndex q) {
    return make(GateKind::RESET, 1, {q, 0, 0});
}
Gate Gate::measure(QubitIndex q, uint32_t clbit) {
    Gate g = make(GateKind::MEASURE, 1, {q, 0, 0});
    g.clbit = clbit;
    return g;
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || arity != other.arity) {
        return false;
    }
    for (size_t k = 0; k < arity; k++) {
        if (qubits[k] != other.qubits[k]) {
            return false;
        }
    }
    if (kind == GateKind::RY && angle != other.angle) {
        return false;
    }
    return kind != GateKind::MEASURE || clbit == other.clbit;
}

Circuit::Circuit(uint32_t width) : width_(width), layout_(Layout::raw(0)) {
    if (width == 0) {
        throw std::invalid_argument("circuit width must be positive");
    }
}

void Circuit::append(const Gate &gate) {
    if (gate.arity < 1 || gate.arity > 3) {
        throw std::invalid_argument("gate arity must be 1..3");
    }
    for (size_t k = 0; k < gate.arity; k++) {
        if (gate.qubits[k] >= width_) {
            throw std::out_of_range(
                "qubit q" + std::to_string(gate.qubits[k]) + " outside circuit of width " + std::to_string(width_));
        }
        for (size_t j = 0; j < k; j++) {
            if (gate.qubits[j] == gate.qubits[k]) {
                throw std::invalid_argument("gate qubits must be pairwise distinct");
            }
        }
    }
    if (gate.kind == GateKind::RY && !std::isfinite(gate.angle)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    if (gate.kind == GateKind::MEASURE) {
        if (gate.clbit >= clbit_used_.size()) {
            clbit_used_.resize(gate.clbit + 1, false);
        }
        if (clbit_used_[gate.clbit]) {
            throw std::invalid_argument("classical bit c" + std::to_string(gate.clbit) + " measured twice");
        }
        clbit_used_[gate.clbit] = true;
        measuring_ = true;
    } else if (measuring_) {
        throw std::invalid_argument("only measurements may follow a measurement");
    }
    gates_.push_back(gate);
}

Circuit &Circuit::operator+=(const Circuit &other) {
    if (other.width_ > width_) {
        throw std::invalid_argument("cannot append a wider circuit");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
    return *this;
}

uint32_t Circuit::num_clbits() const {
    return (uint32_t)clbit_used_.size();
}

std::vector<std::pair<QubitIndex, uint32_t>> Circuit::measurements() const {
    std::vector<std::pair<QubitIndex, uint32_t>> out;
    for (const auto &g : gates_) {
        if (g.kind == GateKind::MEASURE) {
            out.emplace_back(g.qubits[0], g.clbit);
        }
    }
    return out;
}

bool Circuit::has_reset() const {
    return std::any_of(gates_.begin(), gates_.end(), [](const Gate &g) {
        return g.kind == GateKind::RESET;
    });
}

void Circuit::set_layout(Layout layout) {
    layout.validate();
    layout_ = std::move(layout);
}

bool Circuit::operator==(const Circuit &other) const {
    return width_ == other.width_ && gates_ == other.gates_ && layout_ == other.layout_;
}

static std::string format_angle(double theta) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", theta);
    return buf;
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "# qubits " << width_ << "\n";
    for (const auto &g : gates_) {
        switch (g.kind) {
            case GateKind::RY:
                out << "RY(" << format_angle(g.angle) << ") q" << g.qubits[0];
                break;
            case GateKind::MEASURE:
                out << "MEASURE q" << g.qubits[0] << " -> c" << g.clbit;
                break;
            default:
                out << gate_name(g.kind);
                for (auto q : g.targets()) {
                    out << " q" << q;
                }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

struct LineParser {
    std::string_view rest;
    size_t line_no;

    [[noreturn]] void fail(const std::string &msg) const {
        throw std::invalid_argument("circuit text line " + std::to_string(line_no) + ": " + msg);
    }
    void skip_ws() {
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
            rest.remove_prefix(1);
        }
    }
    bool eat(std::string_view token) {
        skip_ws();
        if (rest.substr(0, token.size()) == token) {
            rest.remove_prefix(token.size());
            return true;
        }
        return false;
    }
    uint32_t index(char prefix) {
        skip_ws();
        if (rest.empty() || rest.front() != prefix) {
            fail(std::string("expected '") + prefix + "<index>'");
        }
        rest.remove_prefix(1);
        uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc()) {
            fail("bad index");
        }
        rest.remove_prefix(ptr - rest.data());
        return v;
    }
    double number_until(char close) {
        auto end = rest.find(close);
        if (end == std::string_view::npos) {
            fail("unterminated angle");
        }
        std::string tok(rest.substr(0, end));
        rest.remove_prefix(end + 1);
        try {
            size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) {
                fail("bad angle '" + tok + "'");
            }
            return v;
        } catch (const std::logic_error &) {
            fail("bad angle '" + tok + "'");
        }
    }
    void done() {
        skip_ws();
        if (!rest.empty() && rest.front() != '\r') {
            fail("trailing characters");
        }
    }
};

}  // namespace

Circuit Circuit::from_text(std::string_view text) {
    std::vector<Gate> gates;
    uint32_t declared_width = 0;
    uint32_t max_qubit = 0;
    size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        line_no++;
        LineParser p{line, line_no};
        p.skip_ws();
        if (p.rest.empty() || p.rest.front() == '\r') {
            continue;
        }
        if (p.eat("#")) {
            if (p.eat("qubits")) {
                p.skip_ws();
                uint32_t w = 0;
                auto [ptr, ec] = std::from_chars(p.rest.data(), p.rest.data() + p.rest.size(), w);
                if (ec != std::errc()) {
                    p.fail("bad qubit count");
                }
                declared_width = w;
            }
            continue;
        }
        Gate g{};
        if (p.eat("RY(")) {
            double theta = p.number_until(')');
            g = Gate::ry(theta, p.index('q'));
        } else if (p.eat("CCX")) {
            auto a = p.index('q');
            auto b = p.index('q');
            g = Gate::ccx(a, b, p.index('q'));
        } else if (p.eat("CX")) {
            auto a = p.index('q');
            g = Gate::cx(a, p.index('q'));
        } else if (p.eat("H")) {
            g = Gate::h(p.index('q'));
        } else if (p.eat("X")) {
            g = Gate::x(p.index('q'));
        } else if (p.eat("RESET")) {
            g = Gate::reset(p.index('q'));
        } else if (p.eat("MEASURE")) {
            auto q = p.index('q');
            if (!p.eat("->")) {
                p.fail("expected '->'");
            }
            g = Gate::measure(q, p.index('c'));
        } else {
            p.fail("unknown instruction");
        }
        p.done();
        for (auto q : g.targets()) {
            max_qubit = std::max(max_qubit, q);
        }
        gates.push_back(g);
    }
    uint32_t width = declared_width ? declared_width : max_qubit + 1;
    Circuit c(width);
    for (const auto &g : gates) {
        c.append(g);
    }
    return c;
}

std::string Circuit::to_qasm() const {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << width_ << "];\n";
    if (num_clbits() > 0) {
        out << "creg c[" << num_clbits() << "];\n";
    }
    for (const auto &g : gates_) {
        switch (g.kind) {
            case GateKind::H:
                out << "h q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::X:
                out << "x q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::RY:
                out << "ry(" << format_angle(g.angle) << ") q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::CX:
                out << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
                break;
            case GateKind::CCX:
                out << "ccx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "],q[" << g.qubits[2] << "];\n";
                break;
            case GateKind::RESET:
                out << "reset q[" << g.qubits[0] << "];\n";
                break;
            case GateKind::MEASURE:
                out << "measure q[" << g.qubits[0] << "] -> c[" << g.clbit << "];\n";
                break;
        }
    }
    return out.str();
}

static std::vector<size_t> schedule_cx_layers(const Circuit &c) {
    std::vector<size_t> level(c.width(), 0);
    std::vector<size_t> layer_of(c.size(), 0);
    for (size_t k = 0; k < c.size(); k++) {
        const Gate &g = c.gates()[k];
        if (!g.is_entangling()) {
            continue;
        }
        size_t lv = 0;
        for (auto q : g.targets()) {
            lv = std::max(lv, level[q]);
        }
        lv++;
        for (auto q : g.targets()) {
            level[q] = lv;
        }
        layer_of[k] = lv;
    }
    return layer_of;
}

size_t circuit_cx_depth(const Circuit &c) {
    auto layer_of = schedule_cx_layers(c);
    size_t depth = 0;
    for (auto v : layer_of) {
        depth = std::max(depth, v);
    }
    return depth;
}

std::vector<std::vector<size_t>> cx_layers(const Circuit &c) {
    auto layer_of = schedule_cx_layers(c);
    std::vector<std::vector<size_t>> layers;
    for (size_t k = 0; k < layer_of.size(); k++) {
        if (layer_of[k] == 0) {
            continue;
        }
        if (layers.size() < layer_of[k]) {
            layers.resize(layer_of[k]);
        }
        layers[layer_of[k] - 1].push_back(k);
    }
    return layers;
}

}  // namespace qcrank
