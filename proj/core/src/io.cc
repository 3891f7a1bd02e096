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

#include "qcrank/io.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qcrank {

using nlohmann::json;

namespace {

json parse(std::string_view text, const char *what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

json layout_json(const Layout &l) {
    return json{
        {"n_a", l.n_a},
        {"n_d", l.n_d},
        {"num_bits", l.num_bits},
        {"address_bits", l.address_bits},
        {"data_bits", l.data_bits},
    };
}

Layout layout_of(const json &j) {
    try {
        Layout l = Layout::custom(
            j.at("num_bits").get<uint32_t>(),
            j.at("address_bits").get<std::vector<uint32_t>>(),
            j.at("data_bits").get<std::vector<uint32_t>>());
        return l;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad layout: ") + e.what());
    }
}

json ratio_json(double r) {
    return std::isinf(r) ? json(nullptr) : json(r);
}

double ratio_of(const json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::numeric_limits<double>::infinity();
    }
    return j.at(key).get<double>();
}

}  // namespace

std::string layout_to_json(const Layout &layout) {
    return dump(layout_json(layout));
}

Layout layout_from_json(std::string_view text) {
    return layout_of(parse(text, "layout"));
}

std::string histogram_to_json(const ShotHistogram &h) {
    json counts = json::object();
    for (const auto &[bits, n] : h.counts) {
        counts[bits] = n;
    }
    return dump(json{{"layout", layout_json(h.layout)}, {"counts", counts}, {"shots", h.total()}});
}

ShotHistogram histogram_from_json(std::string_view text) {
    json j = parse(text, "histogram");
    ShotHistogram h;
    try {
        h.layout = layout_of(j.at("layout"));
        for (const auto &[bits, n] : j.at("counts").items()) {
            if (bits.size() != h.layout.num_bits) {
                throw std::invalid_argument("histogram key '" + bits + "' does not match the layout width");
            }
            h.add(bits, n.get<uint64_t>());
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad histogram: ") + e.what());
    }
    return h;
}

std::string calibration_to_json(const CalibrationTable &t) {
    return dump(json{{"k", t.k}, {"means", t.means}, {"thresholds", t.thresholds}});
}

CalibrationTable calibration_from_json(std::string_view text) {
    json j = parse(text, "calibration");
    CalibrationTable t;
    try {
        t.k = j.at("k").get<uint32_t>();
        t.means = j.at("means").get<std::vector<double>>();
        t.thresholds = j.at("thresholds").get<std::vector<double>>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad calibration table: ") + e.what());
    }
    t.validate();
    return t;
}

std::string sequence_to_json(const DataSequence &s) {
    return dump(json{{"bit_depth", s.bit_depth}, {"values", s.values}});
}

DataSequence sequence_from_json(std::string_view text) {
    json j = parse(text, "sequence");
    try {
        return DataSequence(j.at("values").get<std::vector<uint64_t>>(), j.at("bit_depth").get<uint32_t>());
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad sequence: ") + e.what());
    }
}

std::string noise_model_to_json(const NoiseModel &m) {
    return dump(json{
        {"name", m.name},
        {"spam_error", m.spam_error},
        {"u3_error", m.u3_error},
        {"cx_error", m.cx_error},
        {"t1_over_u3", ratio_json(m.t1_over_u3)},
        {"t1_over_cx", ratio_json(m.t1_over_cx)},
    });
}

NoiseModel noise_model_from_json(std::string_view text) {
    json j = parse(text, "noise model");
    NoiseModel m;
    try {
        m.name = j.value("name", std::string("custom"));
        m.spam_error = j.value("spam_error", 0.0);
        m.u3_error = j.value("u3_error", 0.0);
        m.cx_error = j.value("cx_error", 0.0);
        m.t1_over_u3 = ratio_of(j, "t1_over_u3");
        m.t1_over_cx = ratio_of(j, "t1_over_cx");
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad noise model: ") + e.what());
    }
    m.validate();
    return m;
}

std::string write_pbm(const Bitmap &b, bool raw) {
    std::ostringstream out;
    out << (raw ? "P4" : "P1") << "\n" << b.width << " " << b.height << "\n";
    if (raw) {
        const size_t row_bytes = (b.width + 7) / 8;
        for (uint32_t y = 0; y < b.height; y++) {
            std::string row(row_bytes, '\0');
            for (uint32_t x = 0; x < b.width; x++) {
                if (b.at(x, y)) {
                    row[x / 8] = (char)(row[x / 8] | (0x80 >> (x % 8)));
                }
            }
            out << row;
        }
    } else {
        for (uint32_t y = 0; y < b.height; y++) {
            for (uint32_t x = 0; x < b.width; x++) {
                out << (x ? " " : "") << (int)b.at(x, y);
            }
            out << "\n";
        }
    }
    return out.str();
}

namespace {

// Header tokenizer shared by both PBM flavours: skips whitespace and
// comments, returns the next token and leaves `pos` just after it.
std::string pbm_token(std::string_view data, size_t &pos) {
    while (pos < data.size()) {
        if (data[pos] == '#') {
            while (pos < data.size() && data[pos] != '\n') {
                pos++;
            }
        } else if (std::isspace((unsigned char)data[pos])) {
            pos++;
        } else {
            break;
        }
    }
    size_t start = pos;
    while (pos < data.size() && !std::isspace((unsigned char)data[pos]) && data[pos] != '#') {
        pos++;
    }
    if (start == pos) {
        throw std::invalid_argument("truncated PBM header");
    }
    return std::string(data.substr(start, pos - start));
}

uint32_t pbm_dimension(const std::string &tok) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v <= 0 || v > (1 << 20)) {
            throw std::invalid_argument("");
        }
        return (uint32_t)v;
    } catch (const std::exception &) {
        throw std::invalid_argument("bad PBM dimension '" + tok + "'");
    }
}

}  // namespace

Bitmap read_pbm(std::string_view data) {
    size_t pos = 0;
    std::string magic = pbm_token(data, pos);
    if (magic != "P1" && magic != "P4") {
        throw std::invalid_argument("not a PBM file (magic '" + magic + "')");
    }
    uint32_t w = pbm_dimension(pbm_token(data, pos));
    uint32_t h = pbm_dimension(pbm_token(data, pos));
    Bitmap b(w, h);
    if (magic == "P4") {
        pos++;
        const size_t row_bytes = (w + 7) / 8;
        if (data.size() < pos + row_bytes * h) {
            throw std::invalid_argument("truncated P4 pixel data");
        }
        for (uint32_t y = 0; y < h; y++) {
            for (uint32_t x = 0; x < w; x++) {
                unsigned char byte = (unsigned char)data[pos + y * row_bytes + x / 8];
                b.set(x, y, (byte >> (7 - x % 8)) & 1);
            }
        }
        return b;
    }
    size_t i = 0;
    while (i < b.pixels.size() && pos < data.size()) {
        char c = data[pos];
        if (c == '#') {
            while (pos < data.size() && data[pos] != '\n') {
                pos++;
            }
            continue;
        }
        pos++;
        if (c == '0' || c == '1') {
            b.pixels[i++] = (uint8_t)(c - '0');
        } else if (!std::isspace((unsigned char)c)) {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in P1 data");
        }
    }
    if (i != b.pixels.size()) {
        throw std::invalid_argument("truncated P1 pixel data");
    }
    return b;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), (std::streamsize)contents.size());
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

}  // namespace qcrank
