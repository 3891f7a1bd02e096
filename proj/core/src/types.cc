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

#include "qcrank/types.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcrank {

Layout Layout::standard(uint32_t n_a, uint32_t n_d) {
    Layout out;
    out.n_a = n_a;
    out.n_d = n_d;
    out.num_bits = n_a + n_d;
    for (uint32_t k = 0; k < n_a; k++) {
        out.address_bits.push_back(k);
    }
    for (uint32_t k = 0; k < n_d; k++) {
        out.data_bits.push_back(n_a + k);
    }
    return out;
}

Layout Layout::raw(uint32_t num_bits) {
    Layout out;
    out.n_d = num_bits;
    out.num_bits = num_bits;
    for (uint32_t k = 0; k < num_bits; k++) {
        out.data_bits.push_back(k);
    }
    return out;
}

Layout Layout::custom(uint32_t num_bits, std::vector<uint32_t> address_bits, std::vector<uint32_t> data_bits) {
    Layout out;
    out.n_a = (uint32_t)address_bits.size();
    out.n_d = (uint32_t)data_bits.size();
    out.num_bits = num_bits;
    out.address_bits = std::move(address_bits);
    out.data_bits = std::move(data_bits);
    out.validate();
    return out;
}

void Layout::validate() const {
    if (address_bits.size() != n_a || data_bits.size() != n_d) {
        throw std::invalid_argument("layout register sizes disagree with n_a/n_d");
    }
    if (n_a > 63 || n_d > 63) {
        throw std::invalid_argument("layout registers are limited to 63 bits");
    }
    std::vector<bool> seen(num_bits, false);
    auto claim = [&](uint32_t pos) {
        if (pos >= num_bits) {
            throw std::invalid_argument("layout bit position " + std::to_string(pos) + " outside bit-string");
        }
        if (seen[pos]) {
            throw std::invalid_argument("layout bit position " + std::to_string(pos) + " used twice");
        }
        seen[pos] = true;
    };
    for (auto p : address_bits) {
        claim(p);
    }
    for (auto p : data_bits) {
        claim(p);
    }
}

static uint64_t read_register(std::string_view bits, const std::vector<uint32_t> &positions) {
    uint64_t v = 0;
    for (auto p : positions) {
        char c = bits[p];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit-string contains a character other than 0/1");
        }
        v = (v << 1) | (uint64_t)(c == '1');
    }
    return v;
}

std::pair<uint64_t, uint64_t> bitstring_split(std::string_view bits, const Layout &layout) {
    if (bits.size() != layout.num_bits) {
        throw std::invalid_argument(
            "bit-string length " + std::to_string(bits.size()) + " does not match layout width " +
            std::to_string(layout.num_bits));
    }
    return {read_register(bits, layout.address_bits), read_register(bits, layout.data_bits)};
}

std::string bitstring_join(uint64_t address, uint64_t data_word, const Layout &layout) {
    if (layout.n_a < 64 && (address >> layout.n_a) != 0) {
        throw std::out_of_range("address does not fit the address register");
    }
    if (layout.n_d < 64 && (data_word >> layout.n_d) != 0) {
        throw std::out_of_range("data word does not fit the data register");
    }
    std::string out(layout.num_bits, '0');
    for (uint32_t k = 0; k < layout.n_a; k++) {
        out[layout.address_bits[k]] = '0' + ((address >> (layout.n_a - 1 - k)) & 1);
    }
    for (uint32_t k = 0; k < layout.n_d; k++) {
        out[layout.data_bits[k]] = '0' + ((data_word >> (layout.n_d - 1 - k)) & 1);
    }
    return out;
}

DataSequence::DataSequence(std::vector<uint64_t> v, uint32_t depth) : values(std::move(v)), bit_depth(depth) {
    if (bit_depth == 0 || bit_depth > 63) {
        throw std::invalid_argument("bit depth must be in [1, 63]");
    }
    for (auto x : values) {
        if ((x >> bit_depth) != 0) {
            throw std::out_of_range(
                "value " + std::to_string(x) + " does not fit in " + std::to_string(bit_depth) + " bits");
        }
    }
}

AngleGrid::AngleGrid(uint32_t n_a, uint32_t n_d) : n_a_(n_a), n_d_(n_d) {
    if (n_a < 1 || n_d < 1) {
        throw std::invalid_argument("angle grid needs n_a >= 1 and n_d >= 1");
    }
    if (n_a > 26) {
        throw std::invalid_argument("angle grid n_a too large");
    }
    entries_.assign((size_t{1} << n_a) * n_d, 0.0);
}

void AngleGrid::set(size_t address, uint32_t data_qubit, double theta) {
    if (address >= num_addresses() || data_qubit >= n_d_) {
        throw std::out_of_range("angle grid index out of range");
    }
    if (!std::isfinite(theta) || theta < 0 || theta > std::numbers::pi) {
        throw std::out_of_range("angle grid entries must lie in [0, pi]");
    }
    entries_[address * n_d_ + data_qubit] = theta;
}

std::vector<double> AngleGrid::column(uint32_t data_qubit) const {
    std::vector<double> out(num_addresses());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = at(i, data_qubit);
    }
    return out;
}

uint64_t ShotHistogram::total() const {
    uint64_t t = 0;
    for (const auto &[_, n] : counts) {
        t += n;
    }
    return t;
}

void ShotHistogram::add(const std::string &bits, uint64_t n) {
    if (bits.size() != layout.num_bits) {
        throw std::invalid_argument("bit-string length does not match histogram layout");
    }
    counts[bits] += n;
}

}  // namespace qcrank
