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

#include "qcrank/planner.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcrank/sampler.h"

namespace qcrank {

double poisson_cdf(uint64_t x, double lambda) {
    if (!(lambda > 0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("poisson_cdf needs a finite lambda > 0");
    }
    const double log_lambda = std::log(lambda);
    double sum = 0;
    for (uint64_t t = 0; t <= x; t++) {
        double term = std::exp(-lambda + (double)t * log_lambda - std::lgamma((double)t + 1));
        sum += term;
        if ((double)t > lambda && term < sum * 1e-17) {
            break;
        }
    }
    return std::min(sum, 1.0);
}

double lambda_for(double f_addr, uint32_t m_min) {
    if (!(f_addr > 0 && f_addr < 1)) {
        throw std::invalid_argument("f_addr must lie in (0, 1)");
    }
    if (m_min < 1) {
        throw std::invalid_argument("m_min must be >= 1");
    }
    const uint64_t x = m_min - 1;
    double lo = 0;
    double hi = 1;
    while (poisson_cdf(x, hi) > f_addr) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1e-6) {
        double mid = (lo + hi) / 2;
        if (poisson_cdf(x, mid) <= f_addr) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

ShotPlan shots_for_circuit(uint64_t addresses, uint32_t m_min, double f_circ) {
    if (addresses < 1) {
        throw std::invalid_argument("a shot plan needs at least one address");
    }
    if (!(f_circ > 0)) {
        throw std::invalid_argument("f_circ must be positive");
    }
    ShotPlan plan;
    plan.addresses = addresses;
    plan.m_min = m_min;
    plan.f_circ = f_circ;
    plan.f_addr = f_circ / (double)addresses;
    if (plan.f_addr >= 1) {
        throw std::invalid_argument(
            "f_circ / L = " + std::to_string(plan.f_addr) + " must be below 1");
    }
    plan.lambda = lambda_for(plan.f_addr, m_min);
    const double L = (double)addresses;
    uint64_t total = (uint64_t)std::ceil(plan.lambda * L);
    // The bisection overshoots by up to its tolerance; step back while the
    // smaller total still meets the target.
    while (total > 1 && poisson_cdf(m_min - 1, (double)(total - 1) / L) <= plan.f_addr) {
        total--;
    }
    plan.total_shots = total;
    return plan;
}

CoverageEstimate simulate_coverage(const ShotPlan &plan, uint64_t trials, uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("coverage simulation needs at least one trial");
    }
    std::mt19937_64 gen(seed);
    std::poisson_distribution<uint64_t> shots_dist(plan.lambda * (double)plan.addresses);
    ShotRng addr_rng(seed, 0);
    std::vector<uint32_t> seen(plan.addresses);
    CoverageEstimate est;
    est.trials = trials;
    for (uint64_t t = 0; t < trials; t++) {
        std::fill(seen.begin(), seen.end(), 0);
        uint64_t n = shots_dist(gen);
        for (uint64_t s = 0; s < n; s++) {
            seen[addr_rng.below(plan.addresses)]++;
        }
        for (uint32_t c : seen) {
            if (c < plan.m_min) {
                est.failures++;
                break;
            }
        }
    }
    est.rate = (double)est.failures / (double)trials;
    est.sigma = std::sqrt(plan.f_circ * (1 - plan.f_circ) / (double)trials);
    return est;
}

}  // namespace qcrank
