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

#ifndef QCRANK_NOISE_H
#define QCRANK_NOISE_H

#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace qcrank {

/// Gate-level NISQ proxy.
///
/// - spam_error: independent bit flip of every measured bit.
/// - u3_error / cx_error: depolarizing strength after each single-qubit gate
///   (H, X, RY) / each CX or CCX. With probability p a Pauli string drawn
///   uniformly from {I,X,Y,Z}^n is applied to the gate's qubits.
/// - t1_over_u3 / t1_over_cx: ratio of T1 to the gate duration. After each
///   gate its target qubit (the qubit of a single-qubit gate, the target of
///   CX/CCX) is amplitude damped with gamma = 1 - exp(-1 / ratio).
///   Infinity disables damping.
struct NoiseModel {
    std::string name = "ideal";
    double spam_error = 0;
    double u3_error = 0;
    double cx_error = 0;
    double t1_over_u3 = std::numeric_limits<double>::infinity();
    double t1_over_cx = std::numeric_limits<double>::infinity();

    /// Throws std::invalid_argument on probabilities outside [0,1] or
    /// non-positive ratios.
    void validate() const;

    double damping_u3() const;
    double damping_cx() const;
    /// True when some gate can perturb the state (depolarizing or damping).
    bool has_gate_noise() const;

    bool operator==(const NoiseModel &) const = default;
};

/// ideal, minimal, H1-proxy, IBMQ-proxy.
std::vector<NoiseModel> builtin_noise_models();

/// Looks up a builtin model; the error message lists the valid names.
NoiseModel noise_model_by_name(std::string_view name);

}  // namespace qcrank

#endif
