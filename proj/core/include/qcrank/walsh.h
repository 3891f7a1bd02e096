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

#ifndef QCRANK_WALSH_H
#define QCRANK_WALSH_H

#include <cstdint>
#include <span>
#include <vector>

#include "qcrank/circuit.h"

namespace qcrank {

/// Cyclic relabeling of the address qubits that control the CX ladder of a
/// compact uniformly controlled rotation. Valid values are [0, n_a).
struct Shift {
    uint32_t value = 0;
    bool operator==(const Shift &) const = default;
};

/// Reflected binary Gray code: i ^ (i >> 1).
constexpr uint64_t gray_code(uint64_t i) {
    return i ^ (i >> 1);
}

/// Inverse of gray_code.
constexpr uint64_t gray_decode(uint64_t g) {
    for (uint64_t s = 1; s < 64; s <<= 1) {
        g ^= g >> s;
    }
    return g;
}

/// Control qubit (address register position) of the CX that follows each of
/// the 2^n_a rotations in the compact UCRy ladder.
///
/// Entry i is the bit where g_i and g_{(i+1) mod 2^n_a} differ, relabeled
/// through q -> (q + shift) mod n_a.
std::vector<QubitIndex> cx_control_sequence(uint32_t n_a, Shift shift);

/// In-place unnormalized Walsh-Hadamard transform in natural (Hadamard) order:
/// out[j] = sum_i in[i] * (-1)^popcount(i & j). Size must be a power of two.
void fwht(std::span<double> values);

/// Rotation angles for the compact UCRy ladder with the given shift such
/// that address i (address qubit 0 most significant) sees a net rotation of
/// alphas[i]. O(n_a 2^n_a).
std::vector<double> alphas_to_thetas(std::span<const double> alphas, Shift shift);

/// Net per-address rotation produced by a ladder with the given angles.
/// Exact inverse of alphas_to_thetas for the same shift.
std::vector<double> thetas_to_alphas(std::span<const double> thetas, Shift shift);

/// Address-register index whose set bits are the address qubits that have
/// been toggled by the CX ladder before rotation k. Entry k of the returned
/// vector is a permutation of [0, 2^n_a); rotation k contributes
/// (-1)^popcount(address & entry[k]) * theta_k to the angle at `address`.
std::vector<uint64_t> ladder_sign_masks(uint32_t n_a, Shift shift);

}  // namespace qcrank

#endif
