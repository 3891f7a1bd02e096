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

#ifndef QCRANK_APPS_H
#define QCRANK_APPS_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcrank/circuit.h"
#include "qcrank/decoder.h"
#include "qcrank/encoder.h"
#include "qcrank/noise.h"
#include "qcrank/sampler.h"

namespace qcrank {

// ---------------------------------------------------------------------------
// DNA codon matching

/// Three nucleotides packed two bits each (A=00, T=01, G=10, C=11), first
/// letter in the most significant pair.
struct Codon {
    std::string letters;
    uint32_t code = 0;
    bool operator==(const Codon &) const = default;
};

Codon encode_codon(std::string_view letters);
Codon decode_codon(uint32_t code);
/// Splits a nucleotide string whose length is a multiple of 3.
std::vector<Codon> parse_codons(std::string_view nucleotides);

struct CodonMatch {
    /// XOR of the two codes; zero exactly when the codons match.
    uint32_t p = 0;
    bool m0 = false;
    bool operator==(const CodonMatch &) const = default;
};

CodonMatch classical_codon_match(const Codon &a, const Codon &b);

/// Qubit roles in the DNA circuits, relative to the address register of
/// size n_a: a_i = n_a + i and b_i = n_a + 6 + i for i in [0, 6).
///
/// After QBArt loads (codon A, codon B) as a 12-bit word, CX(b_i, a_i)
/// leaves p_i on a_i. X gates turn the a-qubits into XNORs, five reset
/// b-qubits collect a tree of Toffolis whose root b_4 holds m0, and a second
/// X layer restores p. Measured: address, p_0..p_5, m0.
Circuit build_dna_match_circuit(std::span<const Codon> seq_a, std::span<const Codon> seq_b, uint32_t n_a);

/// Same computation with five fresh ancillas instead of recycled b-qubits.
Circuit build_dna_match_reference_circuit(
    std::span<const Codon> seq_a, std::span<const Codon> seq_b, uint32_t n_a);

/// Per address, the 7-bit measured word (p << 1) | m0.
CodonMatch decode_dna_word(uint64_t word);

// ---------------------------------------------------------------------------
// 3-bit Hamming weight

/// Population count of the low three bits of p, as (s1 s0).
uint32_t classical_hamming3(uint32_t p);

/// QBArt(n_a, 3) plus an ancilla at qubit n_a + 3. Measured: address, then
/// s1 (ancilla) and s0 (third data qubit), so the data word is the weight.
Circuit build_hamming_circuit(std::span<const uint64_t> values, uint32_t n_a);

// ---------------------------------------------------------------------------
// Complex conjugation

struct SignedPair {
    int a = 0;
    int b = 0;
    bool operator==(const SignedPair &) const = default;
};

struct ComplexSeriesParams {
    double a = 15;
    double b = -0.06;
    double c = 0.45;
    double d = 0;
};

/// C_t = a exp((b + ic) t + d) for t in [0, T), real and imaginary parts
/// rounded to integers. Throws std::out_of_range if a part leaves [-15, 15].
std::vector<SignedPair> sample_complex_series(const ComplexSeriesParams &p, size_t length = 32);

/// 5-bit 1's complement word: sign bit on top, negatives stored inverted.
uint32_t ones_complement_encode(int value);
int ones_complement_decode(uint32_t word);

/// QBArt(5, 10) with A on data qubits 0..4 and B on 5..9, then X on every B
/// qubit. Measures all qubits.
Circuit build_conjugate_circuit(std::span<const SignedPair> series);

/// Reads (A, -B) back from a measured 10-bit word.
SignedPair decode_conjugate_word(uint64_t word);

// ---------------------------------------------------------------------------
// Binary images

struct Bitmap {
    uint32_t width = 0;
    uint32_t height = 0;
    /// Row-major, 1 = black.
    std::vector<uint8_t> pixels;

    Bitmap() = default;
    Bitmap(uint32_t width, uint32_t height);
    uint8_t at(uint32_t x, uint32_t y) const {
        return pixels[(size_t)y * width + x];
    }
    void set(uint32_t x, uint32_t y, uint8_t v) {
        pixels[(size_t)y * width + x] = v ? 1 : 0;
    }
    bool operator==(const Bitmap &) const = default;
};

/// Packs log2(K) pixels per symbol. The symbol is the Gray-code rank of the
/// pixel group, so adjacent symbols differ in a single pixel.
DataSequence pack_pixels(const Bitmap &image, uint32_t k);
Bitmap unpack_pixels(const DataSequence &symbols, uint32_t width, uint32_t height, uint32_t k);

struct ImageResult {
    Bitmap recovered;
    RecoveryReport report;
    double pixel_accuracy = 0;
    CalibrationTable calibration;
};

/// Encode with QCrank, sample, decode with `calibration` (or one fitted on
/// two balanced calibration circuits under the same noise when empty),
/// unpack and score.
ImageResult image_roundtrip(
    const Bitmap &image,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const std::optional<CalibrationTable> &calibration = std::nullopt,
    const SampleOptions &options = {});

/// A 24 x 16 test pattern used by the demos.
Bitmap demo_bitmap();

// ---------------------------------------------------------------------------
// ECG time series

/// Synthetic heartbeat: P, Q, R, S and T waves as Gaussians over one beat.
std::vector<double> synthetic_ecg(size_t samples = 64);

/// Min-max scales the waveform onto [0, 2^bits - 1] and rounds.
DataSequence digitize(std::span<const double> waveform, uint32_t bits);

}  // namespace qcrank

#endif
