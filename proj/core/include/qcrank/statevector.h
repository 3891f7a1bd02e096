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

#ifndef QCRANK_STATEVECTOR_H
#define QCRANK_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcrank/circuit.h"

namespace qcrank {

using Amplitude = std::complex<double>;

/// Largest register the dense simulator accepts.
inline constexpr uint32_t kMaxDenseWidth = 26;

/// Dense state over `width` qubits.
///
/// Amplitude index bit (width - 1 - q) holds qubit q, so qubit 0 is the most
/// significant bit and |q0 q1 ... q_{n-1}> reads left to right.
class StateVector {
   public:
    explicit StateVector(uint32_t width);
    StateVector(uint32_t width, std::vector<Amplitude> amplitudes);

    uint32_t width() const {
        return width_;
    }
    size_t dim() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    std::span<Amplitude> amplitudes() {
        return amps_;
    }
    const Amplitude &operator[](size_t i) const {
        return amps_[i];
    }

    uint64_t mask(QubitIndex q) const {
        return uint64_t{1} << (width_ - 1 - q);
    }

    void apply_h(QubitIndex q);
    void apply_x(QubitIndex q);
    void apply_y(QubitIndex q);
    void apply_z(QubitIndex q);
    void apply_ry(double theta, QubitIndex q);
    void apply_cx(QubitIndex c, QubitIndex t);
    void apply_ccx(QubitIndex c1, QubitIndex c2, QubitIndex t);

    /// Applies a unitary gate. RESET and MEASURE are rejected; they are
    /// handled by the callers that own the measurement semantics.
    void apply(const Gate &g);

    /// Sum of |amp|^2 over basis states with qubit q = 1.
    double weight_one(QubitIndex q) const;
    double norm_squared() const;
    void scale(double factor);

    /// Replaces each pair (amp(..0..), amp(..1..)) by a single |0> amplitude
    /// whose magnitude is the pair's combined norm. Probabilities of all
    /// other qubits are unchanged and qubit q ends in |0>.
    void merge_reset(QubitIndex q);
    /// Projects qubit q onto `outcome` and then maps it to |0>. Does not
    /// renormalize.
    void collapse_reset(QubitIndex q, bool outcome);

    /// |amp|^2 for every basis index.
    std::vector<double> probabilities() const;

   private:
    uint32_t width_;
    std::vector<Amplitude> amps_;
};

/// Exact noise-free final state. Reset gates use StateVector::merge_reset;
/// measurements are ignored.
StateVector statevector(const Circuit &c);

/// Dense unitary (column-major, dim x dim) of a reset/measure-free circuit.
std::vector<Amplitude> circuit_unitary(const Circuit &c);

}  // namespace qcrank

#endif
