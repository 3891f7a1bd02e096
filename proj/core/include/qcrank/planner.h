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

#ifndef QCRANK_PLANNER_H
#define QCRANK_PLANNER_H

#include <cstdint>

namespace qcrank {

/// Probability of at most x events from a Poisson source of mean lambda.
double poisson_cdf(uint64_t x, double lambda);

/// Smallest mean shots per address (to 1e-6) for which fewer than m_min
/// appearances happen with probability at most f_addr.
double lambda_for(double f_addr, uint32_t m_min);

struct ShotPlan {
    uint64_t addresses = 0;
    uint32_t m_min = 0;
    double f_circ = 0;
    double f_addr = 0;
    double lambda = 0;
    uint64_t total_shots = 0;
};

/// Splits the circuit failure budget evenly over the L addresses and asks
/// for ceil(lambda * L) shots.
ShotPlan shots_for_circuit(uint64_t addresses, uint32_t m_min, double f_circ);

struct CoverageEstimate {
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0;
    /// Binomial standard error of `rate` around the target f_circ.
    double sigma = 0;
};

/// Monte-Carlo check of a plan. Each trial draws a Poisson number of shots
/// with mean lambda * L, assigns every shot a uniformly random address and
/// fails if some address was seen fewer than m_min times.
CoverageEstimate simulate_coverage(const ShotPlan &plan, uint64_t trials, uint64_t seed);

}  // namespace qcrank

#endif
