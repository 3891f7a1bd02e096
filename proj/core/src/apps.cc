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

#include "qcrank/apps.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "qcrank/pipeline.h"
#include "qcrank/walsh.h"

namespace qcrank {

namespace {

constexpr std::string_view kNucleotides = "ATGC";

uint32_t nucleotide_code(char c) {
    auto pos = kNucleotides.find(c);
    if (pos == std::string_view::npos) {
        throw std::invalid_argument(std::string("invalid nucleotide '") + c + "', expected one of A, T, G, C");
    }
    return (uint32_t)pos;
}

void check_dna_inputs(std::span<const Codon> seq_a, std::span<const Codon> seq_b, uint32_t n_a) {
    if (seq_a.size() != seq_b.size()) {
        throw std::invalid_argument("codon sequences must have equal lengths");
    }
    if (n_a < 1 || n_a > 14) {
        throw std::invalid_argument("DNA circuit needs 1 <= n_a <= 14");
    }
    if (seq_a.size() > (size_t{1} << n_a)) {
        throw std::invalid_argument(
            std::to_string(seq_a.size()) + " codon pairs do not fit " + std::to_string(size_t{1} << n_a) +
            " addresses");
    }
}

// QBArt load of the 12-bit words (codonA << 6) | codonB into a circuit wide
// enough for the caller's extra qubits.
Circuit dna_prefix(std::span<const Codon> seq_a, std::span<const Codon> seq_b, uint32_t n_a, uint32_t width) {
    std::vector<uint64_t> words(seq_a.size());
    for (size_t i = 0; i < words.size(); i++) {
        words[i] = ((uint64_t)seq_a[i].code << 6) | seq_b[i].code;
    }
    EncodingConfig cfg{n_a, 12, 2, Encoding::QBArt};
    Circuit c(width);
    c += qcrank_state_prep(qbart_angles(DataSequence(std::move(words), 12), cfg));
    return c;
}

// XOR onto the a-block, then XNOR by flipping it.
void dna_xnor(Circuit &c, uint32_t n_a) {
    for (uint32_t i = 0; i < 6; i++) {
        c.cx(n_a + 6 + i, n_a + i);
    }
    for (uint32_t i = 0; i < 6; i++) {
        c.x(n_a + i);
    }
}

// AND tree of the six XNOR bits onto five target qubits; the last one is m0.
void dna_and_tree(Circuit &c, uint32_t n_a, const std::array<QubitIndex, 5> &t) {
    c.ccx(n_a + 0, n_a + 1, t[0]);
    c.ccx(n_a + 2, n_a + 3, t[1]);
    c.ccx(n_a + 4, n_a + 5, t[2]);
    c.ccx(t[0], t[1], t[3]);
    c.ccx(t[2], t[3], t[4]);
    for (uint32_t i = 0; i < 6; i++) {
        c.x(n_a + i);
    }
}

void dna_measure(Circuit &c, uint32_t n_a, QubitIndex m0) {
    for (uint32_t q = 0; q < n_a + 6; q++) {
        c.measure(q, q);
    }
    c.measure(m0, n_a + 6);
    c.set_layout(Layout::standard(n_a, 7));
}

}  // namespace

Codon encode_codon(std::string_view letters) {
    if (letters.size() != 3) {
        throw std::invalid_argument("a codon has exactly 3 nucleotides, got '" + std::string(letters) + "'");
    }
    Codon c;
    c.letters = std::string(letters);
    for (char l : letters) {
        c.code = (c.code << 2) | nucleotide_code(l);
    }
    return c;
}

Codon decode_codon(uint32_t code) {
    if (code >= 64) {
        throw std::out_of_range("codon code " + std::to_string(code) + " exceeds 6 bits");
    }
    Codon c;
    c.code = code;
    for (int shift = 4; shift >= 0; shift -= 2) {
        c.letters += kNucleotides[(code >> shift) & 3];
    }
    return c;
}

std::vector<Codon> parse_codons(std::string_view nucleotides) {
    if (nucleotides.size() % 3 != 0) {
        throw std::invalid_argument("nucleotide string length must be a multiple of 3");
    }
    std::vector<Codon> out;
    for (size_t i = 0; i < nucleotides.size(); i += 3) {
        out.push_back(encode_codon(nucleotides.substr(i, 3)));
    }
    return out;
}

CodonMatch classical_codon_match(const Codon &a, const Codon &b) {
    CodonMatch m;
    m.p = (a.code ^ b.code) & 63;
    uint32_t xnor = ~m.p & 63;
    m.m0 = true;
    for (int i = 0; i < 6; i++) {
        m.m0 = m.m0 && ((xnor >> i) & 1);
    }
    return m;
}

Circuit build_dna_match_circuit(std::span<const Codon> seq_a, std::span<const Codon> seq_b, uint32_t n_a) {
    check_dna_inputs(seq_a, seq_b, n_a);
    Circuit c = dna_prefix(seq_a, seq_b, n_a, n_a + 12);
    dna_xnor(c, n_a);
    const uint32_t b0 = n_a + 6;
    for (uint32_t i = 0; i < 5; i++) {
        c.reset(b0 + i);
    }
    dna_and_tree(c, n_a, {b0, b0 + 1, b0 + 2, b0 + 3, b0 + 4});
    dna_measure(c, n_a, b0 + 4);
    return c;
}

Circuit build_dna_match_reference_circuit(
    std::span<const Codon> seq_a, std::span<const Codon> seq_b, uint32_t n_a) {
    check_dna_inputs(seq_a, seq_b, n_a);
    Circuit c = dna_prefix(seq_a, seq_b, n_a, n_a + 17);
    dna_xnor(c, n_a);
    const uint32_t f = n_a + 12;
    dna_and_tree(c, n_a, {f, f + 1, f + 2, f + 3, f + 4});
    dna_measure(c, n_a, f + 4);
    return c;
}

CodonMatch decode_dna_word(uint64_t word) {
    return CodonMatch{(uint32_t)(word >> 1) & 63, (word & 1) != 0};
}

uint32_t classical_hamming3(uint32_t p) {
    return (uint32_t)std::popcount(p & 7u);
}

Circuit build_hamming_circuit(std::span<const uint64_t> values, uint32_t n_a) {
    for (uint64_t v : values) {
        if (v > 7) {
            throw std::out_of_range("Hamming input " + std::to_string(v) + " exceeds 3 bits");
        }
    }
    EncodingConfig cfg{n_a, 3, 2, Encoding::QBArt};
    AngleGrid grid = qbart_angles(DataSequence(std::vector<uint64_t>(values.begin(), values.end()), 3), cfg);
    const uint32_t p0 = n_a;
    const uint32_t p1 = n_a + 1;
    const uint32_t p2 = n_a + 2;
    const uint32_t anc = n_a + 3;
    Circuit c(n_a + 4);
    c += qcrank_state_prep(grid);
    c.ccx(p1, p2, anc);
    c.cx(p1, p2);
    c.ccx(p0, p2, anc);
    c.cx(p0, p2);
    for (uint32_t q = 0; q < n_a; q++) {
        c.measure(q, q);
    }
    c.measure(anc, n_a);
    c.measure(p2, n_a + 1);
    c.set_layout(Layout::standard(n_a, 2));
    return c;
}

std::vector<SignedPair> sample_complex_series(const ComplexSeriesParams &p, size_t length) {
    std::vector<SignedPair> out;
    out.reserve(length);
    for (size_t t = 0; t < length; t++) {
        double tt = (double)t;
        std::complex<double> z = p.a * std::exp(std::complex<double>(p.b * tt + p.d, p.c * tt));
        double re = std::round(z.real());
        double im = std::round(z.imag());
        if (!(std::abs(re) <= 15) || !(std::abs(im) <= 15)) {
            throw std::out_of_range(
                "complex series leaves the 5-bit range at t=" + std::to_string(t) + ": (" + std::to_string(re) +
                ", " + std::to_string(im) + ")");
        }
        out.push_back({(int)re, (int)im});
    }
    return out;
}

uint32_t ones_complement_encode(int value) {
    if (value < -15 || value > 15) {
        throw std::out_of_range("value " + std::to_string(value) + " outside the 5-bit range [-15, 15]");
    }
    if (value >= 0) {
        return (uint32_t)value;
    }
    return ~(uint32_t)(-value) & 31u;
}

int ones_complement_decode(uint32_t word) {
    word &= 31u;
    if (word & 16u) {
        return -(int)(~word & 31u);
    }
    return (int)word;
}

Circuit build_conjugate_circuit(std::span<const SignedPair> series) {
    if (series.size() > 32) {
        throw std::invalid_argument("conjugate circuit holds at most 32 values, got " + std::to_string(series.size()));
    }
    std::vector<uint64_t> words;
    for (const auto &s : series) {
        words.push_back(((uint64_t)ones_complement_encode(s.a) << 5) | ones_complement_encode(s.b));
    }
    EncodingConfig cfg{5, 10, 2, Encoding::QBArt};
    Circuit c = qcrank_state_prep(qbart_angles(DataSequence(std::move(words), 10), cfg));
    for (uint32_t i = 0; i < 5; i++) {
        c.x(5 + 5 + i);
    }
    for (uint32_t q = 0; q < 15; q++) {
        c.measure(q, q);
    }
    c.set_layout(Layout::standard(5, 10));
    return c;
}

SignedPair decode_conjugate_word(uint64_t word) {
    return {ones_complement_decode((uint32_t)(word >> 5)), ones_complement_decode((uint32_t)word)};
}

Bitmap::Bitmap(uint32_t width, uint32_t height) : width(width), height(height), pixels((size_t)width * height, 0) {
}

static uint32_t pixels_per_symbol(uint32_t k) {
    if (k < 2 || !std::has_single_bit(k)) {
        throw std::invalid_argument("pixel packing needs K to be a power of two >= 2, got " + std::to_string(k));
    }
    return (uint32_t)std::countr_zero(k);
}

DataSequence pack_pixels(const Bitmap &image, uint32_t k) {
    const uint32_t per = pixels_per_symbol(k);
    const size_t n = image.pixels.size();
    std::vector<uint64_t> symbols((n + per - 1) / per);
    for (size_t s = 0; s < symbols.size(); s++) {
        uint64_t group = 0;
        for (uint32_t j = 0; j < per; j++) {
            size_t idx = s * per + j;
            group = (group << 1) | (idx < n ? image.pixels[idx] & 1 : 0);
        }
        symbols[s] = gray_decode(group);
    }
    return DataSequence(std::move(symbols), per);
}

Bitmap unpack_pixels(const DataSequence &symbols, uint32_t width, uint32_t height, uint32_t k) {
    const uint32_t per = pixels_per_symbol(k);
    Bitmap out(width, height);
    const size_t n = out.pixels.size();
    if (symbols.size() * per < n) {
        throw std::invalid_argument("too few symbols for a " + std::to_string(width) + "x" + std::to_string(height) + " image");
    }
    for (size_t s = 0; s < symbols.size(); s++) {
        uint64_t group = gray_code(symbols.values[s]);
        for (uint32_t j = 0; j < per; j++) {
            size_t idx = s * per + j;
            if (idx < n) {
                out.pixels[idx] = (group >> (per - 1 - j)) & 1;
            }
        }
    }
    return out;
}

ImageResult image_roundtrip(
    const Bitmap &image,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const std::optional<CalibrationTable> &calibration,
    const SampleOptions &options) {
    cfg.validate();
    const uint32_t per = pixels_per_symbol(cfg.k);
    if (image.pixels.size() > (size_t)per * cfg.capacity()) {
        throw std::invalid_argument(
            std::to_string(image.pixels.size()) + " pixels exceed the capacity of " +
            std::to_string((size_t)per * cfg.capacity()));
    }
    ImageResult result;
    DataSequence truth = pack_pixels(image, cfg.k);
    if (calibration) {
        result.calibration = *calibration;
    } else if (!noise.has_gate_noise() && noise.spam_error == 0) {
        result.calibration = ideal_calibration(cfg.k);
    } else {
        result.calibration = calibrate_qcrank(cfg, noise, shots, seed ^ 0xc0ffee, 2, options);
    }
    QCrankRun run = run_qcrank(truth, cfg, noise, shots, seed, options);
    DataSequence decoded = decode_angles(run.angles, result.calibration);
    result.recovered = unpack_pixels(decoded, image.width, image.height, cfg.k);

    std::vector<LabeledAngle> samples;
    for (size_t p = 0; p < truth.size(); p++) {
        samples.push_back({truth.values[p], run.angles[p]});
        if (std::isnan(run.angles[p])) {
            result.report.missing.push_back(p);
        }
    }
    std::vector<double> means(cfg.k, std::numeric_limits<double>::quiet_NaN());
    {
        std::vector<double> sum(cfg.k, 0);
        std::vector<uint64_t> count(cfg.k, 0);
        for (const auto &s : samples) {
            if (!std::isnan(s.alpha)) {
                sum[s.symbol] += s.alpha;
                count[s.symbol]++;
            }
        }
        for (uint32_t i = 0; i < cfg.k; i++) {
            if (count[i]) {
                means[i] = sum[i] / (double)count[i];
            }
        }
    }
    result.report.recovered = decoded;
    result.report.dynamic_range = dynamic_range(means, cfg.k);
    result.report.rvf = rvf(truth, decoded);
    result.report.rsf = decoded == truth ? 1.0 : 0.0;

    size_t good = 0;
    for (size_t i = 0; i < image.pixels.size(); i++) {
        good += image.pixels[i] == result.recovered.pixels[i];
    }
    result.pixel_accuracy = image.pixels.empty() ? 1.0 : (double)good / (double)image.pixels.size();
    return result;
}

Bitmap demo_bitmap() {
    // A ring with a diagonal bar, on a 24 x 16 canvas.
    Bitmap b(24, 16);
    for (uint32_t y = 0; y < 16; y++) {
        for (uint32_t x = 0; x < 24; x++) {
            double dx = ((double)x - 11.5) / 10.5;
            double dy = ((double)y - 7.5) / 7.0;
            double r = std::sqrt(dx * dx + dy * dy);
            bool ring = r > 0.65 && r < 0.95;
            bool bar = std::abs((double)x - 1.5 * (double)y - 0.5) < 1.5 && r < 0.65;
            b.set(x, y, ring || bar);
        }
    }
    return b;
}

std::vector<double> synthetic_ecg(size_t samples) {
    struct Wave {
        double amplitude;
        double center;
        double width;
    };
    static constexpr Wave waves[] = {
        {0.15, 0.20, 0.030},
        {-0.12, 0.365, 0.012},
        {1.00, 0.40, 0.015},
        {-0.25, 0.435, 0.014},
        {0.30, 0.68, 0.050},
    };
    std::vector<double> out(samples);
    for (size_t i = 0; i < samples; i++) {
        double t = (double)i / (double)samples;
        double v = 0;
        for (const auto &w : waves) {
            double z = (t - w.center) / w.width;
            v += w.amplitude * std::exp(-z * z);
        }
        out[i] = v;
    }
    return out;
}

DataSequence digitize(std::span<const double> waveform, uint32_t bits) {
    if (bits < 1 || bits > 32) {
        throw std::invalid_argument("digitize needs 1..32 bits");
    }
    if (waveform.empty()) {
        return DataSequence({}, bits);
    }
    auto [lo, hi] = std::minmax_element(waveform.begin(), waveform.end());
    const double top = (double)((uint64_t{1} << bits) - 1);
    const double range = *hi - *lo;
    std::vector<uint64_t> values(waveform.size());
    for (size_t i = 0; i < values.size(); i++) {
        double x = range > 0 ? (waveform[i] - *lo) / range : 0;
        values[i] = (uint64_t)std::llround(x * top);
    }
    return DataSequence(std::move(values), bits);
}

}  // namespace qcrank
