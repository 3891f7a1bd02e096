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

#include "cli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcrank/apps.h"
#include "qcrank/circuit.h"
#include "qcrank/decoder.h"
#include "qcrank/encoder.h"
#include "qcrank/io.h"
#include "qcrank/noise.h"
#include "qcrank/pipeline.h"
#include "qcrank/planner.h"
#include "qcrank/sampler.h"

namespace qcrank::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

/// Raw command-line values. Unset optionals fall back to the config file and
/// then to per-command defaults.
struct Flags {
    std::optional<std::string> mode;
    std::optional<uint32_t> na;
    std::optional<uint32_t> nd;
    std::optional<uint32_t> k;
    std::optional<uint64_t> shots;
    std::optional<std::string> noise;
    std::optional<uint64_t> seed;
    std::optional<std::string> in;
    std::optional<std::string> out;
    std::optional<std::string> calib;
    std::optional<std::string> sweep;
    std::optional<uint32_t> trials;
    std::optional<uint32_t> fit_calib;
    std::optional<unsigned> threads;
    std::optional<uint64_t> addresses;
    std::optional<uint32_t> mmin;
    std::optional<double> fcirc;
    std::string config;
    std::string app_name;
};

template <typename T>
void fill_from(std::optional<T> &slot, const json &cfg, const char *key) {
    if (!slot && cfg.contains(key)) {
        slot = cfg.at(key).get<T>();
    }
}

void merge_config(Flags &f) {
    if (f.config.empty()) {
        return;
    }
    json cfg;
    try {
        cfg = json::parse(read_file(f.config));
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("config file " + f.config + ": " + e.what());
    }
    if (!cfg.is_object()) {
        throw std::invalid_argument("config file " + f.config + " must hold a JSON object");
    }
    static const std::vector<std::string> known = {
        "mode", "na", "nd", "k", "shots", "noise", "seed", "in", "out", "calib",
        "sweep", "trials", "fit_calib", "threads", "addresses", "mmin", "fcirc"};
    for (const auto &[key, value] : cfg.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("config file " + f.config + ": unknown key '" + key + "'");
        }
    }
    try {
        fill_from(f.mode, cfg, "mode");
        fill_from(f.na, cfg, "na");
        fill_from(f.nd, cfg, "nd");
        fill_from(f.k, cfg, "k");
        fill_from(f.shots, cfg, "shots");
        fill_from(f.noise, cfg, "noise");
        fill_from(f.seed, cfg, "seed");
        fill_from(f.in, cfg, "in");
        fill_from(f.out, cfg, "out");
        fill_from(f.calib, cfg, "calib");
        fill_from(f.sweep, cfg, "sweep");
        fill_from(f.trials, cfg, "trials");
        fill_from(f.fit_calib, cfg, "fit_calib");
        fill_from(f.threads, cfg, "threads");
        fill_from(f.addresses, cfg, "addresses");
        fill_from(f.mmin, cfg, "mmin");
        fill_from(f.fcirc, cfg, "fcirc");
    } catch (const json::exception &e) {
        throw std::invalid_argument("config file " + f.config + ": " + e.what());
    }
}

fs::path out_dir(const Flags &f) {
    if (f.out) {
        return *f.out;
    }
    if (const char *env = std::getenv(kOutDirEnv); env && *env) {
        return env;
    }
    return "qcrank_out";
}

NoiseModel resolve_noise(const Flags &f) {
    std::string spec = f.noise.value_or("ideal");
    if (spec.ends_with(".json") || fs::is_regular_file(spec)) {
        return noise_model_from_json(read_file(spec));
    }
    return noise_model_by_name(spec);
}

SampleOptions sample_options(const Flags &f) {
    SampleOptions o;
    o.threads = f.threads.value_or(0);
    return o;
}

EncodingConfig resolve_encoding(const Flags &f) {
    EncodingConfig cfg;
    cfg.mode = parse_encoding(f.mode.value_or("qcrank"));
    cfg.n_a = f.na.value_or(4);
    cfg.n_d = f.nd.value_or(8);
    cfg.k = f.k.value_or(8);
    cfg.validate();
    return cfg;
}

uint32_t symbol_bits(const EncodingConfig &cfg) {
    return cfg.mode == Encoding::QBArt ? cfg.n_d : (uint32_t)std::bit_width((uint64_t)cfg.k - 1);
}

DataSequence resolve_sequence(const Flags &f, const EncodingConfig &cfg) {
    if (f.in) {
        return sequence_from_json(read_file(*f.in));
    }
    uint64_t seed = f.seed.value_or(1);
    if (cfg.mode == Encoding::QBArt) {
        return random_sequence(cfg.num_addresses(), uint64_t{1} << cfg.n_d, cfg.n_d, seed);
    }
    return random_sequence(cfg.capacity(), cfg.k, symbol_bits(cfg), seed);
}

Circuit encode(const DataSequence &data, const EncodingConfig &cfg) {
    return cfg.mode == Encoding::QBArt ? build_qbart(data, cfg) : build_qcrank(data, cfg);
}

json noise_json(const NoiseModel &m) {
    return json::parse(noise_model_to_json(m));
}

json gate_counts(const Circuit &c) {
    std::map<std::string, uint64_t> counts;
    for (const auto &g : c.gates()) {
        counts[std::string(gate_name(g.kind))]++;
    }
    return json(counts);
}

json circuit_summary(const Circuit &c) {
    return json{
        {"num_qubits", c.width()},
        {"cx_depth", circuit_cx_depth(c)},
        {"gate_counts", gate_counts(c)},
    };
}

void write_json(const fs::path &path, const json &j) {
    write_file(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

int cmd_encode(const Flags &f, std::ostream &out) {
    EncodingConfig cfg = resolve_encoding(f);
    DataSequence data = resolve_sequence(f, cfg);
    Circuit c = encode(data, cfg);
    fs::path dir = out_dir(f);
    write_file(dir / "circuit.txt", c.to_text());
    write_file(dir / "circuit.qasm", c.to_qasm());
    json meta{
        {"mode", encoding_name(cfg.mode)},
        {"n_a", cfg.n_a},
        {"n_d", cfg.n_d},
        {"k", cfg.k},
        {"length", data.size()},
        {"layout", json::parse(layout_to_json(c.layout()))},
        {"circuit", circuit_summary(c)},
    };
    write_json(dir / "encode.json", meta);
    out << "encoded " << encoding_name(cfg.mode) << " n_a=" << cfg.n_a << " n_d=" << cfg.n_d << " values=" << data.size()
        << " qubits=" << c.width() << " cx_depth=" << circuit_cx_depth(c) << " -> " << (dir / "circuit.txt").string()
        << "\n";
    return 0;
}

struct Evaluation {
    DataSequence recovered;
    std::vector<size_t> missing;
    std::optional<double> dynamic_range;
    double rvf = 0;
    bool exact = false;
    ShotHistogram histogram;
};

std::optional<double> run_dynamic_range(const DataSequence &truth, const std::vector<double> &angles, uint32_t k) {
    double sum0 = 0, sum1 = 0;
    size_t n0 = 0, n1 = 0;
    for (size_t p = 0; p < truth.size(); p++) {
        if (std::isnan(angles[p])) {
            continue;
        }
        if (truth.values[p] == 0) {
            sum0 += angles[p];
            n0++;
        } else if (truth.values[p] == k - 1) {
            sum1 += angles[p];
            n1++;
        }
    }
    if (n0 == 0 || n1 == 0) {
        return std::nullopt;
    }
    std::vector<double> means(k, 0);
    means[0] = sum0 / (double)n0;
    means[k - 1] = sum1 / (double)n1;
    return dynamic_range(means, k);
}

Evaluation evaluate(
    const DataSequence &truth,
    const EncodingConfig &cfg,
    const NoiseModel &noise,
    uint64_t shots,
    uint64_t seed,
    const CalibrationTable &table,
    const SampleOptions &opts) {
    Evaluation e;
    if (cfg.mode == Encoding::QBArt) {
        QBArtRun run = run_qbart(truth, cfg, noise, shots, seed, opts);
        e.recovered = run.vote.values;
        e.recovered.bit_depth = truth.bit_depth;
        e.missing = run.vote.missing;
        e.histogram = std::move(run.histogram);
    } else {
        QCrankRun run = run_qcrank(truth, cfg, noise, shots, seed, opts);
        e.recovered = decode_angles(run.angles, table);
        for (size_t p = 0; p < run.angles.size(); p++) {
            if (std::isnan(run.angles[p])) {
                e.missing.push_back(p);
            }
        }
        e.dynamic_range = run_dynamic_range(truth, run.angles, cfg.k);
        e.histogram = std::move(run.histogram);
    }
    e.rvf = rvf(truth, e.recovered);
    e.exact = e.recovered.values == truth.values;
    return e;
}

struct SweepRange {
    uint64_t lo;
    uint64_t hi;
};

SweepRange parse_sweep(const std::string &spec) {
    const std::string prefix = "shots=";
    auto dots = spec.find("..");
    if (!spec.starts_with(prefix) || dots == std::string::npos) {
        throw std::invalid_argument("--sweep expects shots=A..B, got '" + spec + "'");
    }
    try {
        uint64_t lo = std::stoull(spec.substr(prefix.size(), dots - prefix.size()));
        uint64_t hi = std::stoull(spec.substr(dots + 2));
        if (lo < 1 || hi < lo) {
            throw std::invalid_argument("");
        }
        return {lo, hi};
    } catch (const std::exception &) {
        throw std::invalid_argument("--sweep expects shots=A..B with 1 <= A <= B, got '" + spec + "'");
    }
}

std::vector<uint64_t> sweep_points(SweepRange r) {
    std::vector<uint64_t> pts;
    for (uint64_t s = r.lo; s < r.hi; s *= 2) {
        pts.push_back(s);
    }
    pts.push_back(r.hi);
    return pts;
}

std::string fmt_double(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

int cmd_run(const Flags &f, std::ostream &out) {
    EncodingConfig cfg = resolve_encoding(f);
    DataSequence truth = resolve_sequence(f, cfg);
    NoiseModel noise = resolve_noise(f);
    const uint64_t shots = f.shots.value_or(3000);
    const uint64_t seed = f.seed.value_or(1);
    SampleOptions opts = sample_options(f);
    fs::path dir = out_dir(f);

    CalibrationTable table;
    std::string calib_source = "none";
    if (cfg.mode == Encoding::QCrank) {
        if (f.calib) {
            table = calibration_from_json(read_file(*f.calib));
            if (table.k != cfg.k) {
                throw std::invalid_argument(
                    "calibration table has K=" + std::to_string(table.k) + " but --k is " + std::to_string(cfg.k));
            }
            calib_source = *f.calib;
        } else if (f.fit_calib.value_or(0) > 0) {
            table = calibrate_qcrank(cfg, noise, shots, seed ^ 0xca11b, *f.fit_calib, opts);
            write_file(dir / "calibration.json", calibration_to_json(table));
            calib_source = "fitted";
        } else {
            table = ideal_calibration(cfg.k);
            calib_source = "ideal";
        }
    }

    Circuit c = encode(truth, cfg);
    Evaluation e = evaluate(truth, cfg, noise, shots, seed, table, opts);
    write_file(dir / "histogram.json", histogram_to_json(e.histogram));

    json report{
        {"mode", encoding_name(cfg.mode)},
        {"n_a", cfg.n_a},
        {"n_d", cfg.n_d},
        {"k", cfg.k},
        {"shots", shots},
        {"seed", seed},
        {"noise", noise_json(noise)},
        {"circuit", circuit_summary(c)},
        {"truth", truth.values},
        {"recovered", e.recovered.values},
        {"missing", e.missing},
        {"rvf", e.rvf},
        {"rsf", e.exact ? 1.0 : 0.0},
        {"calibration", calib_source},
    };
    report["dynamic_range"] = e.dynamic_range ? json(*e.dynamic_range) : json(nullptr);
    write_json(dir / "report.json", report);
    out << encoding_name(cfg.mode) << " noise=" << noise.name << " shots=" << shots << " rvf=" << fmt_double(e.rvf)
        << " rsf=" << (e.exact ? 1 : 0);
    if (e.dynamic_range) {
        out << " dynamic_range=" << fmt_double(*e.dynamic_range);
    }
    if (!e.missing.empty()) {
        out << " missing=" << e.missing.size();
    }
    out << " -> " << (dir / "report.json").string() << "\n";

    if (f.sweep) {
        const uint32_t trials = f.trials.value_or(4);
        if (trials < 1) {
            throw std::invalid_argument("--trials must be >= 1");
        }
        std::ostringstream csv;
        csv << "shots,trials,rvf,rsf,dynamic_range\n";
        for (uint64_t s : sweep_points(parse_sweep(*f.sweep))) {
            double rvf_sum = 0;
            std::vector<bool> ok;
            double dr_sum = 0;
            size_t dr_n = 0;
            for (uint32_t t = 0; t < trials; t++) {
                Evaluation te = evaluate(truth, cfg, noise, s, ShotRng(seed, s * 1000 + t).next_u64(), table, opts);
                rvf_sum += te.rvf;
                ok.push_back(te.exact);
                if (te.dynamic_range) {
                    dr_sum += *te.dynamic_range;
                    dr_n++;
                }
            }
            csv << s << "," << trials << "," << fmt_double(rvf_sum / trials) << "," << fmt_double(rsf(ok)) << ",";
            if (dr_n) {
                csv << fmt_double(dr_sum / (double)dr_n);
            }
            csv << "\n";
        }
        write_file(dir / "sweep.csv", csv.str());
        out << "sweep -> " << (dir / "sweep.csv").string() << "\n";
    }
    return 0;
}

int cmd_plan(const Flags &f, std::ostream &out) {
    uint64_t addresses;
    if (f.addresses) {
        addresses = *f.addresses;
    } else if (f.na) {
        addresses = uint64_t{1} << *f.na;
    } else {
        addresses = 32;
    }
    ShotPlan plan = shots_for_circuit(addresses, f.mmin.value_or(1), f.fcirc.value_or(1e-3));
    json j{
        {"addresses", plan.addresses},
        {"m_min", plan.m_min},
        {"f_circ", plan.f_circ},
        {"f_addr", plan.f_addr},
        {"lambda", plan.lambda},
        {"total_shots", plan.total_shots},
    };
    fs::path dir = out_dir(f);
    write_json(dir / "plan.json", j);
    out << "L=" << plan.addresses << " m_min=" << plan.m_min << " f_circ=" << plan.f_circ
        << " lambda=" << fmt_double(plan.lambda) << " total_shots=" << plan.total_shots << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// Applications

uint32_t address_bits_for(size_t n) {
    return std::max<uint32_t>(1, (uint32_t)std::bit_width(n > 0 ? n - 1 : 0));
}

json app_header(const std::string &name, const NoiseModel &noise, uint64_t shots, uint64_t seed, const Circuit &c) {
    return json{
        {"app", name},
        {"noise", noise_json(noise)},
        {"shots", shots},
        {"seed", seed},
        {"circuit", circuit_summary(c)},
    };
}

std::string bits6(uint32_t v) {
    std::string s;
    for (int i = 5; i >= 0; i--) {
        s += ((v >> i) & 1) ? '1' : '0';
    }
    return s;
}

int app_dna(const Flags &f, std::ostream &out) {
    std::vector<Codon> a, b;
    const uint64_t seed = f.seed.value_or(1);
    if (f.in) {
        json j = json::parse(read_file(*f.in));
        a = parse_codons(j.at("a").get<std::string>());
        b = parse_codons(j.at("b").get<std::string>());
    } else {
        ShotRng rng(seed, 0xd4a);
        for (int i = 0; i < 16; i++) {
            a.push_back(decode_codon((uint32_t)rng.below(64)));
            b.push_back(rng.below(2) ? a.back() : decode_codon((uint32_t)rng.below(64)));
        }
    }
    const uint32_t n_a = f.na.value_or(address_bits_for(a.size()));
    Circuit c = build_dna_match_circuit(a, b, n_a);
    NoiseModel noise = resolve_noise(f);
    const uint64_t shots = f.shots.value_or(600);
    ShotHistogram h = sample(c, shots, noise, seed, sample_options(f));
    VoteResult vote = majority_vote(h, a.size());

    json pairs = json::array();
    bool all = true;
    for (size_t i = 0; i < a.size(); i++) {
        CodonMatch want = classical_codon_match(a[i], b[i]);
        CodonMatch got = decode_dna_word(vote.values.values[i]);
        bool missing = std::find(vote.missing.begin(), vote.missing.end(), i) != vote.missing.end();
        bool ok = !missing && got == want;
        all = all && ok;
        pairs.push_back({
            {"address", i},
            {"a", a[i].letters},
            {"b", b[i].letters},
            {"p", bits6(got.p)},
            {"m0", got.m0},
            {"expected_p", bits6(want.p)},
            {"expected_m0", want.m0},
            {"correct", ok},
        });
    }
    json report = app_header("dna", noise, shots, seed, c);
    report["n_a"] = n_a;
    report["pairs"] = pairs;
    report["missing"] = vote.missing;
    report["all_correct"] = all;
    fs::path dir = out_dir(f);
    write_json(dir / "dna_report.json", report);
    out << "dna pairs=" << a.size() << " all_correct=" << (all ? "true" : "false") << " -> "
        << (dir / "dna_report.json").string() << "\n";
    return 0;
}

int app_hamming(const Flags &f, std::ostream &out) {
    std::vector<uint64_t> values;
    if (f.in) {
        values = json::parse(read_file(*f.in)).at("values").get<std::vector<uint64_t>>();
    } else {
        for (uint64_t i = 0; i < 16; i++) {
            values.push_back(i % 8);
        }
    }
    const uint32_t n_a = f.na.value_or(address_bits_for(values.size()));
    const uint64_t seed = f.seed.value_or(1);
    Circuit c = build_hamming_circuit(values, n_a);
    NoiseModel noise = resolve_noise(f);
    const uint64_t shots = f.shots.value_or(300);
    VoteResult vote = majority_vote(sample(c, shots, noise, seed, sample_options(f)), values.size());
    json rows = json::array();
    bool all = vote.missing.empty();
    for (size_t i = 0; i < values.size(); i++) {
        uint32_t want = classical_hamming3((uint32_t)values[i]);
        bool ok = vote.values.values[i] == want;
        all = all && ok;
        rows.push_back({{"address", i}, {"input", values[i]}, {"weight", vote.values.values[i]}, {"expected", want}, {"correct", ok}});
    }
    json report = app_header("hamming", noise, shots, seed, c);
    report["n_a"] = n_a;
    report["values"] = rows;
    report["missing"] = vote.missing;
    report["all_correct"] = all;
    fs::path dir = out_dir(f);
    write_json(dir / "hamming_report.json", report);
    out << "hamming values=" << values.size() << " all_correct=" << (all ? "true" : "false") << " -> "
        << (dir / "hamming_report.json").string() << "\n";
    return 0;
}

int app_conjugate(const Flags &f, std::ostream &out) {
    std::vector<SignedPair> series;
    ComplexSeriesParams params;
    if (f.in) {
        json j = json::parse(read_file(*f.in));
        if (j.contains("series")) {
            for (const auto &p : j.at("series")) {
                series.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
            }
        } else {
            const json &p = j.at("params");
            params.a = p.value("a", params.a);
            params.b = p.value("b", params.b);
            params.c = p.value("c", params.c);
            params.d = p.value("d", params.d);
            series = sample_complex_series(params, j.value("length", size_t{32}));
        }
    } else {
        series = sample_complex_series(params);
    }
    const uint64_t seed = f.seed.value_or(1);
    Circuit c = build_conjugate_circuit(series);
    NoiseModel noise = resolve_noise(f);
    const uint64_t shots = f.shots.value_or(1000);
    VoteResult vote = majority_vote(sample(c, shots, noise, seed, sample_options(f)), series.size());
    json in = json::array(), got = json::array();
    size_t good = 0;
    for (size_t i = 0; i < series.size(); i++) {
        SignedPair r = decode_conjugate_word(vote.values.values[i]);
        in.push_back({series[i].a, series[i].b});
        got.push_back({r.a, r.b});
        good += r.a == series[i].a && r.b == -series[i].b;
    }
    json report = app_header("conjugate", noise, shots, seed, c);
    report["series"] = in;
    report["conjugate"] = got;
    report["missing"] = vote.missing;
    report["correct"] = good;
    report["all_correct"] = good == series.size();
    fs::path dir = out_dir(f);
    write_json(dir / "conjugate_report.json", report);
    out << "conjugate values=" << series.size() << " correct=" << good << " -> "
        << (dir / "conjugate_report.json").string() << "\n";
    return 0;
}

int app_image(const Flags &f, std::ostream &out) {
    Bitmap image = f.in ? read_pbm(read_file(*f.in)) : demo_bitmap();
    EncodingConfig cfg{f.na.value_or(4), f.nd.value_or(8), f.k.value_or(8), Encoding::QCrank};
    NoiseModel noise = resolve_noise(f);
    const uint64_t shots = f.shots.value_or(7000);
    const uint64_t seed = f.seed.value_or(1);
    std::optional<CalibrationTable> table;
    if (f.calib) {
        table = calibration_from_json(read_file(*f.calib));
    }
    ImageResult r = image_roundtrip(image, cfg, noise, shots, seed, table, sample_options(f));
    fs::path dir = out_dir(f);
    write_file(dir / "input.pbm", write_pbm(image));
    write_file(dir / "recovered.pbm", write_pbm(r.recovered));
    write_file(dir / "calibration.json", calibration_to_json(r.calibration));
    json report = app_header("image", noise, shots, seed, build_qcrank(pack_pixels(image, cfg.k), cfg));
    report["width"] = image.width;
    report["height"] = image.height;
    report["n_a"] = cfg.n_a;
    report["n_d"] = cfg.n_d;
    report["k"] = cfg.k;
    report["pixel_accuracy"] = r.pixel_accuracy;
    report["rvf"] = r.report.rvf;
    report["dynamic_range"] = std::isfinite(r.report.dynamic_range) ? json(r.report.dynamic_range) : json(nullptr);
    report["missing"] = r.report.missing;
    write_json(dir / "image_report.json", report);
    out << "image " << image.width << "x" << image.height << " pixel_accuracy=" << fmt_double(r.pixel_accuracy)
        << " -> " << (dir / "recovered.pbm").string() << "\n";
    return 0;
}

int app_ecg(const Flags &f, std::ostream &out) {
    std::vector<double> wave;
    if (f.in) {
        wave = json::parse(read_file(*f.in)).at("waveform").get<std::vector<double>>();
    } else {
        wave = synthetic_ecg(64);
    }
    const uint32_t bits = f.nd.value_or(6);
    DataSequence truth = digitize(wave, bits);
    EncodingConfig cfg{f.na.value_or(address_bits_for(truth.size())), bits, 2, Encoding::QBArt};
    NoiseModel noise = resolve_noise(f);
    const uint64_t shots = f.shots.value_or(2000);
    const uint64_t seed = f.seed.value_or(1);
    QBArtRun run = run_qbart(truth, cfg, noise, shots, seed, sample_options(f));
    size_t good = 0;
    for (size_t i = 0; i < truth.size(); i++) {
        good += run.vote.values.values[i] == truth.values[i];
    }
    json report = app_header("ecg", noise, shots, seed, build_qbart(truth, cfg));
    report["n_a"] = cfg.n_a;
    report["n_d"] = cfg.n_d;
    report["digitized"] = truth.values;
    report["recovered"] = run.vote.values.values;
    report["missing"] = run.vote.missing;
    report["correct"] = good;
    report["rvf"] = rvf(truth, run.vote.values);
    fs::path dir = out_dir(f);
    write_json(dir / "ecg_report.json", report);
    out << "ecg samples=" << truth.size() << " correct=" << good << "/" << truth.size() << " -> "
        << (dir / "ecg_report.json").string() << "\n";
    return 0;
}

int cmd_app(const Flags &f, std::ostream &out) {
    if (f.app_name == "dna") {
        return app_dna(f, out);
    }
    if (f.app_name == "hamming") {
        return app_hamming(f, out);
    }
    if (f.app_name == "conjugate") {
        return app_conjugate(f, out);
    }
    if (f.app_name == "image") {
        return app_image(f, out);
    }
    if (f.app_name == "ecg") {
        return app_ecg(f, out);
    }
    throw std::invalid_argument("unknown app '" + f.app_name + "'");
}

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--mode", f.mode, "Encoding: qcrank or qbart");
    sub->add_option("--na", f.na, "Address qubits");
    sub->add_option("--nd", f.nd, "Data qubits");
    sub->add_option("--k", f.k, "QCrank symbol count");
    sub->add_option("--shots", f.shots, "Shots per circuit");
    sub->add_option("--noise", f.noise, "Builtin noise model name or a noise model JSON file");
    sub->add_option("--seed", f.seed, "Seed for data generation and sampling");
    sub->add_option("--in", f.in, "Input file");
    sub->add_option("--out", f.out, std::string("Output directory (default: $") + kOutDirEnv + " or ./qcrank_out)");
    sub->add_option("--calib", f.calib, "Calibration table JSON");
    sub->add_option("--threads", f.threads, "Sampling threads (0 = all cores)");
    sub->add_option("--config", f.config, "JSON file with defaults for any of these flags");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"QCrank / QBArt encoding compiler, simulator and decoder", "qcrank"};
    app.require_subcommand(1);
    Flags f;

    auto *enc = app.add_subcommand("encode", "Compile a sequence into a circuit");
    add_common(enc, f);

    auto *run_cmd = app.add_subcommand("run", "Encode, simulate, decode and report");
    add_common(run_cmd, f);
    run_cmd->add_option("--sweep", f.sweep, "Shot sweep, e.g. shots=100..32000 (doubling steps)");
    run_cmd->add_option("--trials", f.trials, "Runs per sweep point (default 4)");
    run_cmd->add_option("--fit-calib", f.fit_calib, "Fit a calibration table on N balanced circuits first");

    auto *plan = app.add_subcommand("plan", "Shot budget for a target address coverage");
    add_common(plan, f);
    plan->add_option("--addresses,-L", f.addresses, "Number of addresses (default 2^na or 32)");
    plan->add_option("--mmin", f.mmin, "Minimum appearances per address (default 1)");
    plan->add_option("--fcirc", f.fcirc, "Allowed circuit failure probability (default 1e-3)");

    auto *app_cmd = app.add_subcommand("app", "Run an application pipeline");
    add_common(app_cmd, f);
    app_cmd->add_option("name", f.app_name, "dna | hamming | conjugate | image | ecg")
        ->required()
        ->check(CLI::IsMember({"dna", "hamming", "conjugate", "image", "ecg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        merge_config(f);
        if (enc->parsed()) {
            return cmd_encode(f, out);
        }
        if (run_cmd->parsed()) {
            return cmd_run(f, out);
        }
        if (plan->parsed()) {
            return cmd_plan(f, out);
        }
        return cmd_app(f, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcrank::cli
