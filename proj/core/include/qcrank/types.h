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

#ifndef QCRANK_TYPES_H
#define QCRANK_TYPES_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcrank {

/// Where the address and data registers sit inside a measured bit-string.
///
/// Bit-strings are indexed by classical bit label. Within each register the
/// first listed position is the most significant bit.
struct Layout {
    uint32_t n_a = 0;
    uint32_t n_d = 0;
    uint32_t num_bits = 0;
    std::vector<uint32_t> address_bits;
    std::vector<uint32_t> data_bits;

    /// Address bits at positions [0, n_a), data bits at [n_a, n_a + n_d).
    static Layout standard(uint32_t n_a, uint32_t n_d);
    /// Everything is data; used for circuits that carry no address register.
    static Layout raw(uint32_t num_bits);
    static Layout custom(uint32_t num_bits, std::vector<uint32_t> address_bits, std::vector<uint32_t> data_bits);

    /// Throws std::invalid_argument if positions overlap or fall outside num_bits.
    void validate() const;
    bool operator==(const Layout &) const = default;
};

/// Reads (address, data_word) out of a measured bit-string.
std::pair<uint64_t, uint64_t> bitstring_split(std::string_view bits, const Layout &layout);
/// Inverse of bitstring_split; positions not covered by the layout are '0'.
std::string bitstring_join(uint64_t address, uint64_t data_word, const Layout &layout);

/// Classical sequence of unsigned values with a fixed bit depth.
struct DataSequence {
    std::vector<uint64_t> values;
    uint32_t bit_depth = 0;

    DataSequence() = default;
    DataSequence(std::vector<uint64_t> values, uint32_t bit_depth);

    size_t size() const {
        return values.size();
    }
    bool operator==(const DataSequence &) const = default;
};

/// 2^n_a x n_d rotation angles, row per address.
class AngleGrid {
   public:
    AngleGrid(uint32_t n_a, uint32_t n_d);

    uint32_t n_a() const {
        return n_a_;
    }
    uint32_t n_d() const {
        return n_d_;
    }
    size_t num_addresses() const {
        return size_t{1} << n_a_;
    }
    double at(size_t address, uint32_t data_qubit) const {
        return entries_[address * n_d_ + data_qubit];
    }
    /// Throws std::out_of_range unless theta is finite and in [0, pi].
    void set(size_t address, uint32_t data_qubit, double theta);
    /// Angles of one data qubit over all addresses.
    std::vector<double> column(uint32_t data_qubit) const;

   private:
    uint32_t n_a_;
    uint32_t n_d_;
    std::vector<double> entries_;
};

/// Counts of measured bit-strings. Keys are ordered, so iteration and
/// serialization are deterministic.
struct ShotHistogram {
    std::map<std::string, uint64_t> counts;
    Layout layout;

    uint64_t total() const;
    void add(const std::string &bits, uint64_t n = 1);
    bool operator==(const ShotHistogram &) const = default;
};

}  // namespace qcrank

#endif
