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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcrank {

static void check_width(uint32_t width) {
    if (width == 0 || width > kMaxDenseWidth) {
        throw std::invalid_argument(
            "dense simulation supports 1.." + std::to_string(kMaxDenseWidth) + " qubits, got " +
            std::to_string(width));
    }
}

StateVector::StateVector(uint32_t width) : width_(width) {
    check_width(width);
    amps_.assign(size_t{1} << width, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector::StateVector(uint32_t width, std::vector<Amplitude> amplitudes)
    : width_(width), amps_(std::move(amplitudes)) {
    check_width(width);
    if (amps_.size() != (size_t{1} << width)) {
        throw std::invalid_argument("amplitude count does not match width");
    }
}

// Visits every index with bit `m` clear, in increasing order.
template <typename F>
static inline void for_each_pair(size_t dim, uint64_t m, F &&f) {
    for (size_t base = 0; base < dim; base += 2 * m) {
        for (size_t i = base; i < base + m; i++) {
            f(i);
        }
    }
}

void StateVector::apply_h(QubitIndex q) {
    const uint64_t m = mask(q);
    const double r = std::numbers::sqrt2 / 2;
    Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        Amplitude u = a[i];
        Amplitude v = a[i | m];
        a[i] = (u + v) * r;
        a[i | m] = (u - v) * r;
    });
}

void StateVector::apply_x(QubitIndex q) {
    const uint64_t m = mask(q);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        std::swap(a[i], a[i | m]);
    });
}

void StateVector::apply_y(QubitIndex q) {
    const uint64_t m = mask(q);
    Amplitude *a = amps_.data();
    const Amplitude I{0, 1};
    for_each_pair(dim(), m, [&](size_t i) {
        Amplitude u = a[i];
        Amplitude v = a[i | m];
        a[i] = -I * v;
        a[i | m] = I * u;
    });
}

void StateVector::apply_z(QubitIndex q) {
    const uint64_t m = mask(q);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        a[i | m] = -a[i | m];
    });
}

void StateVector::apply_ry(double theta, QubitIndex q) {
    const uint64_t m = mask(q);
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        Amplitude u = a[i];
        Amplitude v = a[i | m];
        a[i] = c * u - s * v;
        a[i | m] = s * u + c * v;
    });
}

void StateVector::apply_cx(QubitIndex c, QubitIndex t) {
    const uint64_t mc = mask(c);
    const uint64_t mt = mask(t);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), mt, [&](size_t i) {
        if (i & mc) {
            std::swap(a[i], a[i | mt]);
        }
    });
}

void StateVector::apply_ccx(QubitIndex c1, QubitIndex c2, QubitIndex t) {
    const uint64_t mc = mask(c1) | mask(c2);
    const uint64_t mt = mask(t);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), mt, [&](size_t i) {
        if ((i & mc) == mc) {
            std::swap(a[i], a[i | mt]);
        }
    });
}

void StateVector::apply(const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            apply_h(g.qubits[0]);
            return;
        case GateKind::X:
            apply_x(g.qubits[0]);
            return;
        case GateKind::RY:
            apply_ry(g.angle, g.qubits[0]);
            return;
        case GateKind::CX:
            apply_cx(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::CCX:
            apply_ccx(g.qubits[0], g.qubits[1], g.qubits[2]);
            return;
        case GateKind::RESET:
        case GateKind::MEASURE:
            break;
    }
    throw std::invalid_argument("StateVector::apply only handles unitary gates");
}

double StateVector::weight_one(QubitIndex q) const {
    const uint64_t m = mask(q);
    double w = 0;
    const Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        w += std::norm(a[i | m]);
    });
    return w;
}

double StateVector::norm_squared() const {
    double w = 0;
    for (const auto &x : amps_) {
        w += std::norm(x);
    }
    return w;
}

void StateVector::scale(double factor) {
    for (auto &x : amps_) {
        x *= factor;
    }
}

void StateVector::merge_reset(QubitIndex q) {
    const uint64_t m = mask(q);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        Amplitude u = a[i];
        Amplitude v = a[i | m];
        double nu = std::abs(u);
        double nv = std::abs(v);
        double mag = std::sqrt(nu * nu + nv * nv);
        if (mag > 0) {
            Amplitude phase = nu >= nv ? u / nu : v / nv;
            a[i] = phase * mag;
        } else {
            a[i] = 0;
        }
        a[i | m] = 0;
    });
}

void StateVector::collapse_reset(QubitIndex q, bool outcome) {
    const uint64_t m = mask(q);
    Amplitude *a = amps_.data();
    for_each_pair(dim(), m, [&](size_t i) {
        if (outcome) {
            a[i] = a[i | m];
        }
        a[i | m] = 0;
    });
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(dim());
    for (size_t i = 0; i < p.size(); i++) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

StateVector statevector(const Circuit &c) {
    StateVector sv(c.width());
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::MEASURE) {
            continue;
        }
        if (g.kind == GateKind::RESET) {
            sv.merge_reset(g.qubits[0]);
            continue;
        }
        sv.apply(g);
    }
    return sv;
}

std::vector<Amplitude> circuit_unitary(const Circuit &c) {
    if (c.width() > 14) {
        throw std::invalid_argument("dense unitary limited to 14 qubits");
    }
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::RESET || g.kind == GateKind::MEASURE) {
            throw std::invalid_argument("circuit_unitary requires a reset- and measurement-free circuit");
        }
    }
    const size_t dim = size_t{1} << c.width();
    std::vector<Amplitude> u(dim * dim);
    for (size_t col = 0; col < dim; col++) {
        std::vector<Amplitude> basis(dim, Amplitude{0, 0});
        basis[col] = 1;
        StateVector sv(c.width(), std::move(basis));
        for (const auto &g : c.gates()) {
            sv.apply(g);
        }
        std::copy(sv.amplitudes().begin(), sv.amplitudes().end(), u.begin() + col * dim);
    }
    return u;
}

}  // namespace qcrank
