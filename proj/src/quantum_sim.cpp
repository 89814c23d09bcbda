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
#include "qsemigroup/quantum_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "qsemigroup/error.hpp"

namespace qsemigroup {
namespace {

constexpr unsigned kSweepMarkedBits = 20;

void diffuse(std::span<Amplitude> amps) {
    const Amplitude mean =
        std::accumulate(amps.begin(), amps.end(), Amplitude{}) /
        static_cast<double>(amps.size());
    for (Amplitude &a : amps) {
        a = 2.0 * mean - a;
    }
}

void grover_step(std::span<Amplitude> amps, std::span<const BasisIndex> marked) {
    for (BasisIndex j : marked) {
        amps[j] = -amps[j];
    }
    diffuse(amps);
}

// k-th basis index (0-based) that is not in the sorted `marked` list.
BasisIndex nth_unmarked(BasisIndex k, std::span<const BasisIndex> marked) {
    for (BasisIndex m : marked) {
        if (m > k) {
            break;
        }
        ++k;
    }
    return k;
}

BasisIndex sample_plane(std::uint64_t dimension, std::span<const BasisIndex> marked,
                        double success, Rng &rng) {
    const std::uint64_t unmarked = dimension - marked.size();
    if (!marked.empty() && (unmarked == 0 || rng.uniform() < success)) {
        return marked[rng.below(marked.size())];
    }
    return nth_unmarked(rng.below(unmarked), marked);
}

// |sum_{c<P} exp(2 pi i c delta)|^2 / P^2.
double phase_kernel(double delta, double period) {
    const double r = delta - std::nearbyint(delta);
    if (std::abs(r) < 1e-15) {
        return 1.0;
    }
    const double ratio = std::sin(period * std::numbers::pi * r) /
                         (period * std::sin(std::numbers::pi * r));
    return ratio * ratio;
}

void hadamard(std::span<Amplitude> amps, unsigned qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    const double scale = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Amplitude a = amps[i];
        const Amplitude b = amps[i | bit];
        amps[i] = (a + b) * scale;
        amps[i | bit] = (a - b) * scale;
    }
}

void controlled_phase(std::span<Amplitude> amps, unsigned q1, unsigned q2,
                      double angle) {
    const std::size_t both = (std::size_t{1} << q1) | (std::size_t{1} << q2);
    const Amplitude phase = std::polar(1.0, angle);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) {
            amps[i] *= phase;
        }
    }
}

void swap_qubits(std::span<Amplitude> amps, unsigned q1, unsigned q2) {
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t b2 = std::size_t{1} << q2;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & b1) && !(i & b2)) {
            std::swap(amps[i], amps[(i ^ b1) | b2]);
        }
    }
}

// Inverse QFT on qubits [first, first + count), qubit first + count - 1
// being the most significant.
void inverse_qft(std::span<Amplitude> amps, unsigned first, unsigned count) {
    for (unsigned i = 0; i < count / 2; ++i) {
        swap_qubits(amps, first + i, first + count - 1 - i);
    }
    for (unsigned i = 0; i < count; ++i) {
        for (unsigned j = 0; j < i; ++j) {
            controlled_phase(amps, first + i, first + j,
                             -std::numbers::pi / std::ldexp(1.0, static_cast<int>(i - j)));
        }
        hadamard(amps, first + i);
    }
}

} // namespace

StateVector::StateVector(unsigned qubits, unsigned max_qubits) : qubits_(qubits) {
    if (qubits > max_qubits) {
        throw Error(ErrorKind::TooManyQubits,
                    "dense simulation of " + std::to_string(qubits) +
                        " qubits exceeds the limit of " + std::to_string(max_qubits));
    }
    amplitudes_.assign(std::size_t{1} << qubits, Amplitude{});
    amplitudes_[0] = 1.0;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::probability(std::span<const BasisIndex> indices) const {
    double total = 0.0;
    for (BasisIndex j : indices) {
        total += std::norm(amplitudes_.at(j));
    }
    return total;
}

StateVector uniform_state(unsigned b, unsigned max_qubits) {
    StateVector state(b, max_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.size()));
    std::ranges::fill(state.amplitudes(), Amplitude{amp, 0.0});
    return state;
}

void apply_grover_iteration(StateVector &state, std::span<const BasisIndex> marked) {
    grover_step(state.amplitudes(), marked);
}

void apply_grover_iteration(StateVector &state, const OraclePredicate &oracle) {
    std::span<Amplitude> amps = state.amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if (oracle(j)) {
            amps[j] = -amps[j];
        }
    }
    diffuse(amps);
}

BasisIndex measure(const StateVector &state, Rng &rng) {
    std::span<const Amplitude> amps = state.amplitudes();
    const double r = rng.uniform() * state.norm_squared();
    double acc = 0.0;
    BasisIndex last_nonzero = 0;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const double p = std::norm(amps[j]);
        if (p == 0.0) {
            continue;
        }
        acc += p;
        last_nonzero = j;
        if (r < acc) {
            return j;
        }
    }
    return last_nonzero;
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights)
    : cumulative_(weights.size()) {
    if (weights.empty()) {
        throw Error(ErrorKind::InvalidArgument, "cannot sample from no outcomes");
    }
    std::partial_sum(weights.begin(), weights.end(), cumulative_.begin());
    if (!(cumulative_.back() > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "outcome weights sum to zero");
    }
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] > 0.0) {
            last_positive_ = i;
            break;
        }
    }
}

std::size_t DiscreteSampler::sample(Rng &rng) const {
    const double r = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    if (it == cumulative_.end()) {
        return last_positive_;
    }
    return static_cast<std::size_t>(it - cumulative_.begin());
}

SubspaceState SubspaceState::uniform(std::uint64_t dimension, Count marked) {
    SubspaceState s;
    s.dimension = dimension;
    s.marked = marked;
    s.theta = std::asin(std::sqrt(std::min(
        1.0, static_cast<double>(marked) / static_cast<double>(dimension))));
    s.phase_position = s.theta;
    return s;
}

double SubspaceState::success_probability() const {
    const double s = std::sin(phase_position);
    return std::clamp(s * s, 0.0, 1.0);
}

GroverSampler::GroverSampler(const RegisterLayout &layout, Count marked,
                             SearchOptions options)
    : dimension_(layout.dimension()) {
    if (marked == 0) {
        throw Error(ErrorKind::NoSolutions,
                    "Grover search needs at least one marked state");
    }
    iterations_ = optimal_grover_iterations(dimension_, marked);
    if (options.mode == SimMode::Dense) {
        StateVector state = uniform_state(layout.total_bits(), options.dense_qubits);
        marked_ = sweep_marked(layout, options.dense_qubits);
        for (Count k = 0; k < iterations_; ++k) {
            apply_grover_iteration(state, marked_);
        }
        success_ = state.probability(marked_);
        std::vector<double> probs(state.size());
        std::ranges::transform(state.amplitudes(), probs.begin(),
                               [](const Amplitude &a) { return std::norm(a); });
        dense_.emplace(probs);
    } else {
        marked_ = encoded_solutions(layout);
        SubspaceState plane = SubspaceState::uniform(dimension_, marked_.size());
        plane.iterate(iterations_);
        success_ = marked_.empty() ? 0.0 : plane.success_probability();
    }
}

BasisIndex GroverSampler::sample(Rng &rng) const {
    if (dense_) {
        return dense_->sample(rng);
    }
    return sample_plane(dimension_, marked_, success_, rng);
}

BasisIndex grover_search_known(const RegisterLayout &layout, Count marked,
                               std::uint64_t seed, SearchOptions options) {
    Rng rng(seed);
    return GroverSampler(layout, marked, options).sample(rng);
}

Count unknown_search_cutoff(std::uint64_t dimension) {
    return static_cast<Count>(
        std::ceil(4.5 * std::sqrt(static_cast<double>(dimension))));
}

UnknownSearchResult grover_search_unknown(const RegisterLayout &layout,
                                          std::uint64_t seed, SearchOptions options) {
    const std::uint64_t dimension = layout.dimension();
    const double cap = std::sqrt(static_cast<double>(dimension));
    const Count cutoff = unknown_search_cutoff(dimension);

    std::vector<BasisIndex> marked;
    std::optional<StateVector> start;
    SubspaceState plane;
    if (options.mode == SimMode::Dense) {
        start = uniform_state(layout.total_bits(), options.dense_qubits);
        marked = sweep_marked(layout, options.dense_qubits);
    } else {
        marked = encoded_solutions(layout);
        plane = SubspaceState::uniform(dimension, marked.size());
    }

    Rng rng(seed);
    UnknownSearchResult result;
    double m = 1.0;
    while (result.total_iterations < cutoff) {
        const Count j = rng.below(static_cast<std::uint64_t>(std::ceil(m)));
        BasisIndex outcome;
        if (start) {
            StateVector state = *start;
            for (Count k = 0; k < j; ++k) {
                apply_grover_iteration(state, marked);
            }
            outcome = measure(state, rng);
        } else {
            SubspaceState run = plane;
            run.iterate(j);
            outcome = sample_plane(dimension, marked,
                                   marked.empty() ? 0.0 : run.success_probability(),
                                   rng);
        }
        ++result.runs;
        result.total_iterations += j;
        if (layout.oracle(outcome)) {
            result.index = outcome;
            return result;
        }
        m = std::min(m * 6.0 / 5.0, cap);
    }
    return result;
}

unsigned default_counting_bits(unsigned b) { return (b + 1) / 2 + 2; }

CountingResult counting_result(std::uint64_t dimension, unsigned p, std::uint64_t y) {
    const double n = static_cast<double>(dimension);
    const double period = std::ldexp(1.0, static_cast<int>(p));
    const double s = std::sin(std::numbers::pi * static_cast<double>(y) / period);
    CountingResult r;
    r.p = p;
    r.y = y;
    r.m_estimate = std::clamp(n * s * s, 0.0, n);
    r.m_rounded = static_cast<Count>(std::llround(r.m_estimate));
    r.error_bound = 2.0 * std::numbers::pi * std::sqrt(r.m_estimate * n) / period +
                    std::numbers::pi * std::numbers::pi * n / (period * period);
    return r;
}

std::vector<double> counting_distribution(std::uint64_t dimension, Count marked,
                                          unsigned p) {
    if (dimension == 0 || marked > dimension) {
        throw Error(ErrorKind::InvalidArgument,
                    "marked count must lie in 0..N with N >= 1");
    }
    if (p < 1 || p > kMaxCountingBits) {
        throw Error(ErrorKind::InvalidArgument,
                    "counting register width must lie in 1.." +
                        std::to_string(kMaxCountingBits));
    }
    const std::size_t outcomes = std::size_t{1} << p;
    const double period = static_cast<double>(outcomes);
    const double theta = SubspaceState::uniform(dimension, marked).theta;
    // The uniform start splits evenly over the eigenvectors with phases
    // +-2 theta, i.e. fractions omega and 1 - omega of a full turn.
    const double omega = theta / std::numbers::pi;
    std::vector<double> dist(outcomes);
    for (std::size_t y = 0; y < outcomes; ++y) {
        const double frac = static_cast<double>(y) / period;
        dist[y] = 0.5 * (phase_kernel(omega - frac, period) +
                         phase_kernel(1.0 - omega - frac, period));
    }
    return dist;
}

std::vector<double> dense_counting_crosscheck(unsigned b, unsigned p,
                                              const OraclePredicate &oracle) {
    if (b < 1 || p < 1) {
        throw Error(ErrorKind::InvalidArgument, "registers need at least one qubit");
    }
    if (b + p > kMaxCrosscheckQubits) {
        throw Error(ErrorKind::TooManyQubits,
                    "dense counting circuit limited to " +
                        std::to_string(kMaxCrosscheckQubits) + " qubits");
    }
    const std::size_t search_size = std::size_t{1} << b;
    const std::size_t outcomes = std::size_t{1} << p;
    std::vector<BasisIndex> marked;
    for (BasisIndex j = 0; j < search_size; ++j) {
        if (oracle(j)) {
            marked.push_back(j);
        }
    }

    StateVector state = uniform_state(b + p, kMaxCrosscheckQubits);
    std::span<Amplitude> amps = state.amplitudes();
    // Control qubit k applies G^{2^k} to the search register.
    for (unsigned k = 0; k < p; ++k) {
        const std::size_t power = std::size_t{1} << k;
        for (std::size_t c = 0; c < outcomes; ++c) {
            if (!(c & power)) {
                continue;
            }
            std::span<Amplitude> block = amps.subspan(c << b, search_size);
            for (std::size_t r = 0; r < power; ++r) {
                grover_step(block, marked);
            }
        }
    }
    inverse_qft(amps, b, p);

    std::vector<double> dist(outcomes, 0.0);
    for (std::size_t y = 0; y < outcomes; ++y) {
        for (std::size_t j = 0; j < search_size; ++j) {
            dist[y] += std::norm(amps[(y << b) | j]);
        }
    }
    return dist;
}

Count layout_marked_count(const RegisterLayout &layout) {
    if (layout.total_bits() <= kSweepMarkedBits) {
        return marked_count(layout, kSweepMarkedBits);
    }
    const auto s = NumericalSemigroup::from_generators(layout.generators());
    return denumerant(s, layout.target());
}

CountingResult quantum_count(const RegisterLayout &layout, unsigned p,
                             std::uint64_t seed, SimMode mode) {
    std::vector<double> dist;
    if (mode == SimMode::Dense) {
        if (layout.total_bits() + p > kMaxCrosscheckQubits) {
            throw Error(ErrorKind::TooManyQubits,
                        "dense counting needs b + p <= " +
                            std::to_string(kMaxCrosscheckQubits));
        }
        dist = dense_counting_crosscheck(
            layout.total_bits(), p, [&](BasisIndex j) { return layout.oracle(j); });
    } else {
        dist = counting_distribution(layout.dimension(), layout_marked_count(layout), p);
    }
    Rng rng(seed);
    const std::size_t y = DiscreteSampler(dist).sample(rng);
    return counting_result(layout.dimension(), p, y);
}

} // namespace qsemigroup
