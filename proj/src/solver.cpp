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
#include "qsemigroup/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "qsemigroup/error.hpp"

namespace qsemigroup {
namespace {

long double harmonic(Count d) {
    long double h = 0.0L;
    for (Count i = 1; i <= d; ++i) {
        h += 1.0L / static_cast<long double>(i);
    }
    return h;
}

bool reversed_lex_less(const Factorization &a, const Factorization &b) {
    return std::lexicographical_compare(a.lambdas.rbegin(), a.lambdas.rend(),
                                        b.lambdas.rbegin(), b.lambdas.rend());
}

Factorization to_factorization(const RegisterLayout &layout, BasisIndex j) {
    Factorization f{layout.decode(j), layout.target()};
    Integer sum = 0;
    for (std::size_t i = 0; i < f.lambdas.size(); ++i) {
        sum += f.lambdas[i] * layout.generators()[i];
    }
    if (sum != layout.target()) {
        throw std::logic_error("unverified witness " + std::to_string(j));
    }
    return f;
}

} // namespace

SdpAnswer median_count(const RegisterLayout &layout, unsigned p, std::uint64_t seed,
                       const SolverOptions &options) {
    const unsigned shots = std::max(1U, options.repetitions);
    std::vector<double> dist;
    if (options.mode == SimMode::Dense) {
        if (layout.total_bits() + p > kMaxCrosscheckQubits) {
            throw Error(ErrorKind::TooManyQubits,
                        "dense counting needs b + p <= " +
                            std::to_string(kMaxCrosscheckQubits));
        }
        dist = dense_counting_crosscheck(layout.total_bits(), p,
                                         [&](BasisIndex j) { return layout.oracle(j); });
    } else {
        dist = counting_distribution(layout.dimension(), layout_marked_count(layout), p);
    }
    const DiscreteSampler sampler(dist);

    std::vector<CountingResult> results;
    results.reserve(shots);
    for (unsigned i = 0; i < shots; ++i) {
        Rng rng(Rng::derive(seed, i));
        results.push_back(counting_result(layout.dimension(), p, sampler.sample(rng)));
    }
    std::vector<Count> estimates;
    for (const CountingResult &r : results) {
        estimates.push_back(r.m_rounded);
    }
    std::ranges::nth_element(estimates, estimates.begin() + (shots - 1) / 2);
    const Count median = estimates[(shots - 1) / 2];

    SdpAnswer answer;
    answer.denumerant_estimate = median;
    answer.counting = *std::ranges::find(results, median, &CountingResult::m_rounded);
    answer.grover_applications = shots * ((Count{1} << p) - 1);
    return answer;
}

unsigned refined_counting_bits(std::uint64_t dimension, double marked_upper,
                               unsigned floor_bits) {
    const double n = static_cast<double>(dimension);
    const double pi = std::numbers::pi;
    // |M~ - M| <= 2 pi k sqrt(M N) / P + k^2 pi^2 N / P^2 when |y - P omega| <= k.
    constexpr double k = 2.0;
    unsigned p = std::max(1U, floor_bits);
    for (; p < kMaxRefinedCountingBits; ++p) {
        const double period = std::ldexp(1.0, static_cast<int>(p));
        const double bound = 2.0 * pi * k * std::sqrt(marked_upper * n) / period +
                             k * k * pi * pi * n / (period * period);
        if (bound < 0.5) {
            break;
        }
    }
    return p;
}

SdpAnswer solve_sdp(const NumericalSemigroup &s, Integer t, std::uint64_t seed,
                    const SolverOptions &options) {
    if (t < 0) {
        throw Error(ErrorKind::InvalidArgument, "target must be non-negative");
    }
    SdpAnswer answer;
    if (t == 0 || t < s.multiplicity()) {
        answer.denumerant_estimate = t == 0 ? 1 : 0;
        answer.counting.m_estimate = static_cast<double>(answer.denumerant_estimate);
        answer.counting.m_rounded = answer.denumerant_estimate;
    } else {
        const RegisterLayout layout(s, t);
        if (options.counting_bits) {
            answer = median_count(layout, *options.counting_bits, seed, options);
        } else {
            const SdpAnswer coarse = median_count(
                layout, default_counting_bits(layout.total_bits()),
                Rng::derive(seed, 0), options);
            const double upper = coarse.counting.m_estimate +
                                 coarse.counting.error_bound + 1.0;
            const unsigned p = refined_counting_bits(layout.dimension(), upper,
                                                     coarse.counting.p);
            answer = median_count(layout, p, Rng::derive(seed, 1), options);
            answer.grover_applications += coarse.grover_applications;
        }
    }
    if (options.verify) {
        answer.classical_truth = denumerant(s, t);
    }
    return answer;
}

NsmpAnswer solve_nsmp(const NumericalSemigroup &s, Integer t, std::uint64_t seed,
                      const SolverOptions &options) {
    if (t < 0) {
        throw Error(ErrorKind::InvalidArgument, "target must be non-negative");
    }
    NsmpAnswer answer;
    if (t == 0) {
        answer.member = true;
        answer.witness = Factorization{std::vector<Integer>(s.embedding_dimension(), 0), 0};
        return answer;
    }
    if (t < s.multiplicity()) {
        return answer;
    }
    const RegisterLayout layout(s, t);
    const UnknownSearchResult search =
        grover_search_unknown(layout, seed, {options.mode, options.dense_qubits});
    answer.grover_runs = search.runs;
    answer.total_iterations = search.total_iterations;
    if (search.index) {
        answer.member = true;
        answer.witness = to_factorization(layout, *search.index);
    }
    return answer;
}

Count expected_coupon_trials(Count d) {
    return static_cast<Count>(
        std::llround(static_cast<long double>(d) * harmonic(d)));
}

CollectionReport collect_all_solutions(const NumericalSemigroup &s, Integer t,
                                       std::uint64_t seed, const SolverOptions &options,
                                       std::optional<Count> max_trials) {
    if (t < 1) {
        throw Error(ErrorKind::InvalidArgument, "collection needs t >= 1");
    }
    CollectionReport report;
    const SdpAnswer sdp = solve_sdp(s, t, Rng::derive(seed, 0), options);
    const Count d = sdp.denumerant_estimate;
    report.denumerant_estimate = d;
    report.expected_trials = expected_coupon_trials(d);
    if (d == 0) {
        return report;
    }
    const Count cap = max_trials.value_or(static_cast<Count>(
        std::ceil(50.0L * static_cast<long double>(d) * harmonic(d))));

    const RegisterLayout layout(s, t);
    const GroverSampler sampler(layout, d, {options.mode, options.dense_qubits});
    Rng rng(Rng::derive(seed, 1));
    std::set<BasisIndex> found;
    while (found.size() < d) {
        if (report.trials_used >= cap) {
            throw Error(ErrorKind::CollectionTimeout,
                        "collected " + std::to_string(found.size()) + " of " +
                            std::to_string(d) + " solutions in " +
                            std::to_string(cap) + " trials");
        }
        const BasisIndex j = sampler.sample(rng);
        ++report.trials_used;
        if (layout.oracle(j)) {
            found.insert(j);
        }
    }
    for (BasisIndex j : found) {
        report.solutions.push_back(to_factorization(layout, j));
    }
    std::ranges::sort(report.solutions, reversed_lex_less);
    return report;
}

std::vector<IterationRow> iteration_report(const NumericalSemigroup &s,
                                           Integer t_from, Integer t_to,
                                           Integer step) {
    if (t_from < 1 || t_to < t_from || step < 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "iteration report needs 1 <= from <= to and step >= 1");
    }
    const std::vector<Count> table = denumerant_table(s, t_to);
    std::vector<IterationRow> rows;
    for (Integer t = t_from; t <= t_to; t += step) {
        const Count d = table[t];
        const IterationEstimate est = iteration_estimate(
            s, t, d >= 1 ? std::optional<Count>(d) : std::nullopt);
        rows.push_back({t, d, est.classical, est.quantum_sqrt, est.grover_optimal});
    }
    return rows;
}

} // namespace qsemigroup
