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

// Trajectory sampler.
//
// Every shot is an independent quantum trajectory driven by its own
// counter-based random stream. Noise decisions are drawn gate by gate in a
// fixed order: one depolarizing draw per noisy gate (plus one for the Pauli
// string when it fires), then one damping draw for the gate's target, one
// draw per reset, and finally one draw for the basis state plus one per
// measured bit for readout flips.
//
// Most shots see few or no noise events, and all of those follow the same
// deterministic "quiet" evolution (unitaries plus no-jump damping). That
// path is computed once, with checkpoints, together with the probability
// of leaving it at each decision. A shot first scans its draws against those
// cached probabilities; only when it leaves the quiet path does it restore
// the nearest checkpoint and continue as a full stochastic simulation from
// the gate where it diverged, redrawing from the same stream position. The
// histogram is therefore identical to running every shot in full.

#include "qcrank/sampler.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "qcrank/statevector.h"

namespace qcrank {

namespace {

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

ShotRng::ShotRng(uint64_t seed, uint64_t stream)
    : state_(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ mix64(stream * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL)) {
}

uint64_t ShotRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

double ShotRng::uniform() {
    return (double)(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t ShotRng::below(uint64_t n) {
    return (uint64_t)(uniform() * (double)n) % n;
}

namespace {

struct GateNoise {
    double p_dep = 0;
    double gamma = 0;
    bool any() const {
        return p_dep > 0 || gamma > 0;
    }
};

struct Trajectory {
    StateVector sv;
    double norm2 = 1;
};

inline double jump_threshold(double gamma, double w1, double norm2) {
    return gamma * (w1 / norm2);
}

void keep_normalized(Trajectory &t) {
    if (t.norm2 < 1e-100) {
        t.sv.scale(1 / std::sqrt(t.norm2));
        t.norm2 = 1;
    }
}

inline QubitIndex damped_qubit(const Gate &g) {
    return g.qubits[g.arity - 1];
}

// Visits the (|..0..>, |..1..>) amplitude pairs of the target qubit.
template <typename F>
inline void for_each_target_pair(Trajectory &t, uint64_t mt, F &&f) {
    Amplitude *a = t.sv.amplitudes().data();
    const size_t dim = t.sv.dim();
    for (size_t base = 0; base < dim; base += 2 * mt) {
        for (size_t i = base; i < base + mt; i++) {
            f(i, a[i], a[i | mt]);
        }
    }
}

/// Applies `g` and no-jump damping of its target in a single pass. Returns
/// the |1> weight of the target just before damping.
double fused_gate_damp(Trajectory &t, const Gate &g, double keep) {
    const uint64_t mt = t.sv.mask(damped_qubit(g));
    double w1 = 0;
    auto damp = [&](Amplitude &v) {
        w1 += std::norm(v);
        v *= keep;
    };
    switch (g.kind) {
        case GateKind::H: {
            const double r = std::sqrt(0.5);
            for_each_target_pair(t, mt, [&](size_t, Amplitude &u, Amplitude &v) {
                Amplitude x = u;
                u = (x + v) * r;
                v = (x - v) * r;
                damp(v);
            });
            break;
        }
        case GateKind::RY: {
            const double c = std::cos(g.angle / 2);
            const double s = std::sin(g.angle / 2);
            for_each_target_pair(t, mt, [&](size_t, Amplitude &u, Amplitude &v) {
                Amplitude x = u;
                u = c * x - s * v;
                v = s * x + c * v;
                damp(v);
            });
            break;
        }
        case GateKind::X:
            for_each_target_pair(t, mt, [&](size_t, Amplitude &u, Amplitude &v) {
                std::swap(u, v);
                damp(v);
            });
            break;
        case GateKind::CX:
        case GateKind::CCX: {
            uint64_t mc = 0;
            for (size_t k = 0; k + 1 < g.arity; k++) {
                mc |= t.sv.mask(g.qubits[k]);
            }
            for_each_target_pair(t, mt, [&](size_t i, Amplitude &u, Amplitude &v) {
                if ((i & mc) == mc) {
                    std::swap(u, v);
                }
                damp(v);
            });
            break;
        }
        default:
            throw std::logic_error("fused_gate_damp on a non-unitary gate");
    }
    return w1;
}

// Scales the |1> branch of qubit q by `keep` and returns its prior weight.
double damp_scale(Trajectory &t, QubitIndex q, double keep) {
    double w1 = 0;
    for_each_target_pair(t, t.sv.mask(q), [&](size_t, Amplitude &, Amplitude &v) {
        w1 += std::norm(v);
        v *= keep;
    });
    return w1;
}

// Undoes the no-jump scaling of qubit q and lets its |1> branch decay
// into |0>.
void jump(Trajectory &t, QubitIndex q, double keep) {
    for_each_target_pair(t, t.sv.mask(q), [&](size_t, Amplitude &u, Amplitude &v) {
        u = v / keep;
        v = 0;
    });
}

void apply_pauli(StateVector &sv, QubitIndex q, uint64_t code) {
    switch (code & 3) {
        case 1:
            sv.apply_x(q);
            break;
        case 2:
            sv.apply_y(q);
            break;
        case 3:
            sv.apply_z(q);
            break;
        default:
            break;
    }
}

/// Unitary followed by no-jump damping. Returns the jump threshold, or 0
/// for gates without damping.
double step_quiet(Trajectory &t, const Gate &g, const GateNoise &gn) {
    if (gn.gamma <= 0) {
        t.sv.apply(g);
        return 0;
    }
    double w1 = fused_gate_damp(t, g, std::sqrt(1 - gn.gamma));
    double threshold = jump_threshold(gn.gamma, w1, t.norm2);
    t.norm2 -= gn.gamma * w1;
    keep_normalized(t);
    return threshold;
}

void do_reset(Trajectory &t, QubitIndex q, ShotRng &rng) {
    double w1 = t.sv.weight_one(q);
    bool outcome = rng.uniform() < w1 / t.norm2;
    t.sv.collapse_reset(q, outcome);
    t.norm2 = t.sv.norm_squared();
    keep_normalized(t);
}

void step_noisy(Trajectory &t, const Gate &g, const GateNoise &gn, ShotRng &rng) {
    if (g.kind == GateKind::MEASURE) {
        return;
    }
    if (g.kind == GateKind::RESET) {
        do_reset(t, g.qubits[0], rng);
        return;
    }
    const bool depolarized = gn.p_dep > 0 && rng.uniform() < gn.p_dep;
    if (gn.gamma <= 0 || depolarized) {
        t.sv.apply(g);
    }
    if (depolarized) {
        uint64_t code = rng.below(uint64_t{1} << (2 * g.arity));
        for (size_t k = 0; k < g.arity; k++) {
            apply_pauli(t.sv, g.qubits[k], code >> (2 * k));
        }
    }
    if (gn.gamma <= 0) {
        return;
    }
    // Without a Pauli event this is the quiet path's arithmetic, so a shot
    // that only jumps here reproduces the cached state bit for bit.
    const double keep = std::sqrt(1 - gn.gamma);
    double w1 = depolarized ? damp_scale(t, damped_qubit(g), keep) : fused_gate_damp(t, g, keep);
    if (rng.uniform() < jump_threshold(gn.gamma, w1, t.norm2)) {
        jump(t, damped_qubit(g), keep);
        t.norm2 = w1;
    } else {
        t.norm2 -= gn.gamma * w1;
    }
    keep_normalized(t);
}

struct MeasureSpec {
    uint32_t width;
    uint32_t num_clbits;
    std::vector<std::pair<QubitIndex, uint32_t>> measured;
    double spam;

    std::string readout(uint64_t basis_index, ShotRng &rng) const {
        std::string bits(num_clbits, '0');
        for (const auto &[q, c] : measured) {
            bool b = (basis_index >> (width - 1 - q)) & 1;
            if (spam > 0 && rng.uniform() < spam) {
                b = !b;
            }
            bits[c] = b ? '1' : '0';
        }
        return bits;
    }
};

uint64_t draw_basis_state(const StateVector &sv, ShotRng &rng) {
    double total = sv.norm_squared();
    double target = rng.uniform() * total;
    double acc = 0;
    auto amps = sv.amplitudes();
    size_t last_nonzero = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p > 0) {
            last_nonzero = i;
            acc += p;
            if (acc > target) {
                return i;
            }
        }
    }
    return last_nonzero;
}

class QuietPath {
   public:
    QuietPath(const Circuit &c, const std::vector<GateNoise> &noise, size_t budget_bytes) : circuit_(c), noise_(noise) {
        const auto &gates = c.gates();
        stop_ = gates.size();
        for (size_t k = 0; k < gates.size(); k++) {
            if (gates[k].kind == GateKind::RESET || gates[k].kind == GateKind::MEASURE) {
                stop_ = k;
                break;
            }
        }
        ends_in_reset_ = stop_ < gates.size() && gates[stop_].kind == GateKind::RESET;
        bool needs_checkpoints = ends_in_reset_ ||
                                 std::any_of(noise.begin(), noise.begin() + stop_, [](const GateNoise &n) {
                                     return n.any();
                                 });
        size_t state_bytes = (size_t{1} << c.width()) * sizeof(Amplitude);
        size_t slots = std::max<size_t>(1, budget_bytes / state_bytes);
        stride_ = std::max<size_t>(1, (stop_ + slots) / slots);

        thresholds_.resize(stop_);
        Trajectory t{StateVector(c.width()), 1};
        for (size_t k = 0; k < stop_; k++) {
            if (needs_checkpoints && k % stride_ == 0) {
                checkpoints_.emplace_back(k, t);
            }
            thresholds_[k] = step_quiet(t, gates[k], noise[k]);
        }
        if (needs_checkpoints && checkpoints_.back().first != stop_) {
            checkpoints_.emplace_back(stop_, t);
        }
        if (!ends_in_reset_) {
            cdf_.resize(t.sv.dim());
            double acc = 0;
            for (size_t i = 0; i < cdf_.size(); i++) {
                acc += std::norm(t.sv[i]);
                cdf_[i] = acc;
            }
        }
    }

    std::string run_shot(uint64_t shot, uint64_t seed, const MeasureSpec &ms, Trajectory &scratch) const {
        ShotRng rng(seed, shot);
        for (size_t k = 0; k < stop_; k++) {
            const GateNoise &gn = noise_[k];
            if (!gn.any()) {
                continue;
            }
            ShotRng at_gate = rng;
            bool left = gn.p_dep > 0 && rng.uniform() < gn.p_dep;
            if (!left && gn.gamma > 0) {
                left = rng.uniform() < thresholds_[k];
            }
            if (left) {
                return diverge(k, at_gate, ms, scratch);
            }
        }
        if (ends_in_reset_) {
            return diverge(stop_, rng, ms, scratch);
        }
        double target = rng.uniform() * cdf_.back();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
        uint64_t idx = (uint64_t)std::min<size_t>(it - cdf_.begin(), cdf_.size() - 1);
        while (idx > 0 && cdf_[idx] == cdf_[idx - 1]) {
            idx--;
        }
        return ms.readout(idx, rng);
    }

   private:
    std::string diverge(size_t at, ShotRng rng, const MeasureSpec &ms, Trajectory &t) const {
        const auto &gates = circuit_.gates();
        auto cp = std::upper_bound(checkpoints_.begin(), checkpoints_.end(), at, [](size_t g, const auto &entry) {
            return g < entry.first;
        });
        --cp;
        t = cp->second;
        for (size_t k = cp->first; k < at; k++) {
            step_quiet(t, gates[k], noise_[k]);
        }
        for (size_t k = at; k < gates.size(); k++) {
            step_noisy(t, gates[k], noise_[k], rng);
        }
        uint64_t idx = draw_basis_state(t.sv, rng);
        return ms.readout(idx, rng);
    }

    const Circuit &circuit_;
    const std::vector<GateNoise> &noise_;
    size_t stop_ = 0;
    bool ends_in_reset_ = false;
    size_t stride_ = 1;
    std::vector<double> thresholds_;
    /// (gate index, quiet state before that gate), sorted by index.
    std::vector<std::pair<size_t, Trajectory>> checkpoints_;
    std::vector<double> cdf_;
};

}  // namespace

ShotHistogram sample(
    const Circuit &c, uint64_t shots, const NoiseModel &noise, uint64_t seed, const SampleOptions &options) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (c.width() > kMaxDenseWidth) {
        throw std::invalid_argument(
            "circuit of width " + std::to_string(c.width()) + " exceeds dense simulation limit " +
            std::to_string(kMaxDenseWidth));
    }
    noise.validate();

    ShotHistogram hist;
    if (c.layout().num_bits == c.num_clbits()) {
        hist.layout = c.layout();
    } else if (c.layout().num_bits == 0) {
        hist.layout = Layout::raw(c.num_clbits());
    } else {
        throw std::invalid_argument("circuit layout does not match its measured bits");
    }

    std::vector<GateNoise> gate_noise(c.size());
    for (size_t k = 0; k < c.size(); k++) {
        const Gate &g = c.gates()[k];
        switch (g.kind) {
            case GateKind::H:
            case GateKind::X:
            case GateKind::RY:
                gate_noise[k] = GateNoise{noise.u3_error, noise.damping_u3()};
                break;
            case GateKind::CX:
            case GateKind::CCX:
                gate_noise[k] = GateNoise{noise.cx_error, noise.damping_cx()};
                break;
            default:
                break;
        }
    }

    MeasureSpec ms{c.width(), c.num_clbits(), c.measurements(), noise.spam_error};
    QuietPath path(c, gate_noise, options.checkpoint_budget_bytes);

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = (unsigned)std::min<uint64_t>(threads, shots);
    std::vector<std::map<std::string, uint64_t>> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned w) {
        try {
            uint64_t begin = shots * w / threads;
            uint64_t end = shots * (w + 1) / threads;
            Trajectory scratch{StateVector(c.width()), 1};
            for (uint64_t s = begin; s < end; s++) {
                partial[w][path.run_shot(s, seed, ms, scratch)]++;
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(worker, w);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (auto &part : partial) {
        for (auto &[bits, n] : part) {
            hist.counts[bits] += n;
        }
    }
    return hist;
}

}  // namespace qcrank
