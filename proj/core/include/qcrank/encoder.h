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

#ifndef QCRANK_ENCODER_H
#define QCRANK_ENCODER_H

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qcrank/circuit.h"
#include "qcrank/types.h"
#include "qcrank/walsh.h"

namespace qcrank {

enum class Encoding { QCrank, QBArt };

std::string_view encoding_name(Encoding e);
Encoding parse_encoding(std::string_view name);

/// Register sizes and symbol alphabet for one encoder instance.
///
/// For QCrank, `k` is the number of symbols (>= 2). For QBArt the symbol
/// width equals n_d bits and `k` is ignored.
struct EncodingConfig {
    uint32_t n_a = 1;
    uint32_t n_d = 1;
    uint32_t k = 2;
    Encoding mode = Encoding::QCrank;

    void validate() const;
    size_t num_addresses() const {
        return size_t{1} << n_a;
    }
    /// Number of values a single circuit holds.
    size_t capacity() const;
    /// Classical bits a full circuit stores: ceil(log2 k) per QCrank value,
    /// n_d per QBArt value.
    size_t capacity_bits() const;
};

/// Data qubit j gets shift j mod n_a.
std::vector<Shift> default_shifts(uint32_t n_a, uint32_t n_d);

/// Parallel uniformly controlled Ry over n_a address qubits (qubits
/// [0, n_a)) and n_d data qubits (qubits [n_a, n_a + n_d)).
///
/// Data qubits are processed in groups of n_a. Inside a group the ladders
/// are interleaved step by step so that, with distinct shifts, each CX layer
/// touches disjoint qubit pairs and the group costs 2^n_a CX layers.
Circuit build_pucry(const AngleGrid &angles, std::span<const Shift> shifts);
Circuit build_pucry(const AngleGrid &angles);

/// alpha = pi * value / (K - 1).
double symbol_angle(uint64_t value, uint32_t k);

/// Sequence position p lands at address p mod 2^n_a on data qubit
/// p / 2^n_a. Unused cells are padded with symbol 0.
AngleGrid map_symbols_to_angles(const DataSequence &data, const EncodingConfig &cfg);

/// Inverse of the placement used by map_symbols_to_angles.
struct GridCell {
    size_t address;
    uint32_t data_qubit;
};
GridCell qcrank_cell(size_t position, uint32_t n_a);

/// Hadamards on the address register, pUCRy of the mapped angles, then a
/// measurement of every qubit in the standard layout.
Circuit build_qcrank(const DataSequence &data, const EncodingConfig &cfg);

/// Value i is written in binary (data qubit 0 most significant) at address i.
/// Angles are restricted to {0, pi}.
Circuit build_qbart(const DataSequence &data, const EncodingConfig &cfg);

/// QBArt angle grid without the circuit around it.
AngleGrid qbart_angles(const DataSequence &data, const EncodingConfig &cfg);

/// The encoder prefix (H layer + pUCRy) without measurements, for callers
/// that append their own processing before measuring.
Circuit qcrank_state_prep(const AngleGrid &angles);

}  // namespace qcrank

#endif
