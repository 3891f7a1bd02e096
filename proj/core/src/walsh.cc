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

#include "qcrank/walsh.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace qcrank {

static uint32_t log2_exact(size_t n) {
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("length " + std::to_string(n) + " is not a power of two >= 2");
    }
    return (uint32_t)std::countr_zero(n);
}

static void check_shift(uint32_t n_a, Shift shift) {
    if (n_a < 1 || n_a > 30) {
        throw std::invalid_argument("n_a must be in [1, 30]");
    }
    if (shift.value >= n_a) {
        throw std::invalid_argument(
            "shift " + std::to_string(shift.value) + " out of range for n_a=" + std::to_string(n_a));
    }
}

std::vector<QubitIndex> cx_control_sequence(uint32_t n_a, Shift shift) {
    check_shift(n_a, shift);
    const uint64_t n = uint64_t{1} << n_a;
    std::vector<QubitIndex> out(n);
    for (uint64_t i = 0; i < n; i++) {
        uint64_t diff = gray_code(i) ^ gray_code((i + 1) & (n - 1));
        auto bit = (uint32_t)std::countr_zero(diff);
        out[i] = (bit + shift.value) % n_a;
    }
    return out;
}

void fwht(std::span<double> values) {
    const size_t n = values.size();
    if (n == 1) {
        return;
    }
    log2_exact(n);
    for (size_t h = 1; h < n; h <<= 1) {
        for (size_t base = 0; base < n; base += h << 1) {
            for (size_t j = base; j < base + h; j++) {
                double a = values[j];
                double b = values[j + h];
                values[j] = a + b;
                values[j + h] = a - b;
            }
        }
    }
}

std::vector<uint64_t> ladder_sign_masks(uint32_t n_a, Shift shift) {
    auto controls = cx_control_sequence(n_a, shift);
    std::vector<uint64_t> masks(controls.size());
    uint64_t toggled = 0;
    for (size_t k = 0; k < controls.size(); k++) {
        masks[k] = toggled;
        // Address qubit q is bit (n_a - 1 - q) of the address index.
        toggled ^= uint64_t{1} << (n_a - 1 - controls[k]);
    }
    return masks;
}

std::vector<double> alphas_to_thetas(std::span<const double> alphas, Shift shift) {
    uint32_t n_a = log2_exact(alphas.size());
    check_shift(n_a, shift);
    std::vector<double> spectrum(alphas.begin(), alphas.end());
    fwht(spectrum);
    auto masks = ladder_sign_masks(n_a, shift);
    const double scale = 1.0 / (double)alphas.size();
    std::vector<double> thetas(alphas.size());
    for (size_t k = 0; k < thetas.size(); k++) {
        thetas[k] = spectrum[masks[k]] * scale;
    }
    return thetas;
}

std::vector<double> thetas_to_alphas(std::span<const double> thetas, Shift shift) {
    uint32_t n_a = log2_exact(thetas.size());
    check_shift(n_a, shift);
    auto masks = ladder_sign_masks(n_a, shift);
    std::vector<double> alphas(thetas.size());
    for (size_t k = 0; k < thetas.size(); k++) {
        alphas[masks[k]] = thetas[k];
    }
    fwht(alphas);
    return alphas;
}

}  // namespace qcrank
