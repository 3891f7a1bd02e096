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

#include "qcrank/noise.h"

#include <cmath>
#include <stdexcept>

namespace qcrank {

void NoiseModel::validate() const {
    auto prob = [&](double p, const char *what) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument(std::string("noise model ") + name + ": " + what + " must be in [0, 1]");
        }
    };
    prob(spam_error, "spam_error");
    prob(u3_error, "u3_error");
    prob(cx_error, "cx_error");
    if (!(t1_over_u3 > 0) || !(t1_over_cx > 0)) {
        throw std::invalid_argument("noise model " + name + ": T1 ratios must be positive");
    }
}

static double damping(double ratio) {
    if (std::isinf(ratio)) {
        return 0;
    }
    return -std::expm1(-1.0 / ratio);
}

double NoiseModel::damping_u3() const {
    return damping(t1_over_u3);
}

double NoiseModel::damping_cx() const {
    return damping(t1_over_cx);
}

bool NoiseModel::has_gate_noise() const {
    return u3_error > 0 || cx_error > 0 || damping_u3() > 0 || damping_cx() > 0;
}

std::vector<NoiseModel> builtin_noise_models() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {
        NoiseModel{"ideal", 0, 0, 0, inf, inf},
        NoiseModel{"minimal", 1e-3, 1e-3, 1e-3, 1e5, 1e5},
        NoiseModel{"H1-proxy", 3e-3, 5e-5, 3e-3, 5000, 170},
        NoiseModel{"IBMQ-proxy", 2.5e-2, 4e-4, 1.4e-2, 2000, 200},
    };
}

NoiseModel noise_model_by_name(std::string_view name) {
    std::string known;
    for (const auto &m : builtin_noise_models()) {
        if (m.name == name) {
            return m;
        }
        known += known.empty() ? "" : ", ";
        known += m.name;
    }
    throw std::invalid_argument("unknown noise model '" + std::string(name) + "'; builtin models: " + known);
}

}  // namespace qcrank
