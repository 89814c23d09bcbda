// Copyright 2026 The qsemigroup Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * End-to-end algorithms: the Sylvester denumerant via quantum counting,
 * constructive membership via Grover search, and collection of every
 * factorization by repeated search.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsemigroup/quantum_sim.hpp"
#include "qsemigroup/semigroup.hpp"

namespace qsemigroup {

inline constexpr unsigned kDefaultRepetitions = 11;
inline constexpr unsigned kMaxRefinedCountingBits = 22;

struct SolverOptions {
    SimMode mode = SimMode::Analytic;
    unsigned dense_qubits = kDefaultDenseQubits;
    /// Counting shots per estimate; the median is reported.
    unsigned repetitions = kDefaultRepetitions;
    /// Fixed counting-register width. When empty, a coarse pass at
    /// default_counting_bits(b) sizes a second, precise pass.
    std::optional<unsigned> counting_bits;
    /// Fill SdpAnswer::classical_truth from the exact denumerant.
    bool verify = false;
};

struct SdpAnswer {
    Count denumerant_estimate = 0;
    /// The median shot of the final counting pass.
    CountingResult counting;
    std::optional<Count> classical_truth;
    /// Controlled Grover applications over every shot, sum of 2^p - 1.
    Count grover_applications = 0;
};

struct NsmpAnswer {
    bool member = false;
    std::optional<Factorization> witness;
    Count grover_runs = 0;
    Count total_iterations = 0;
};

struct CollectionReport {
    /// Distinct factorizations, in enumerate_factorizations order.
    std::vector<Factorization> solutions;
    Count trials_used = 0;
    Count expected_trials = 0;
    Count denumerant_estimate = 0;
};

struct IterationRow {
    Integer t = 0;
    Count denumerant = 0;
    Count classical_iterations = 0;
    Count quantum_sqrt_iterations = 0;
    std::optional<Count> grover_optimal_iterations;

    friend bool operator==(const IterationRow &, const IterationRow &) = default;
};

/// Median of `repetitions` counting shots on a fixed register width p.
SdpAnswer median_count(const RegisterLayout &layout, unsigned p, std::uint64_t seed,
                       const SolverOptions &options);

/// Smallest p >= floor_bits for which outcomes within two bins of the true
/// phase still round to the exact count, given an upper estimate of M.
unsigned refined_counting_bits(std::uint64_t dimension, double marked_upper,
                               unsigned floor_bits);

SdpAnswer solve_sdp(const NumericalSemigroup &s, Integer t, std::uint64_t seed,
                    const SolverOptions &options = {});

NsmpAnswer solve_nsmp(const NumericalSemigroup &s, Integer t, std::uint64_t seed,
                      const SolverOptions &options = {});

/// Throws Error(CollectionTimeout) when max_trials (default
/// ceil(50 d H_d)) pass without d distinct solutions.
CollectionReport collect_all_solutions(const NumericalSemigroup &s, Integer t,
                                       std::uint64_t seed,
                                       const SolverOptions &options = {},
                                       std::optional<Count> max_trials = std::nullopt);

/// round(d * H_d); 0 for d = 0.
Count expected_coupon_trials(Count d);

std::vector<IterationRow> iteration_report(const NumericalSemigroup &s,
                                           Integer t_from, Integer t_to,
                                           Integer step = 1);

} // namespace qsemigroup
