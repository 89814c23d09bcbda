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
 * Exact simulation of Grover search and quantum counting over the search
 * register described by a RegisterLayout.
 *
 * Two simulation modes are provided:
 *  - Dense: the full 2^b complex amplitude vector.
 *  - Analytic: the two-dimensional plane spanned by the uniform
 *    superpositions over marked and unmarked states, which the Grover
 *    operator leaves invariant. It reproduces the dense outcome
 *    distribution exactly at a cost independent of 2^b.
 *
 * Conventions: sin(theta) = sqrt(M / N); the Grover operator G = D * O
 * (oracle phase flip, then inversion about the mean) has eigenvalues
 * exp(+-2i theta) on the invariant plane, and a counting outcome y on p
 * qubits estimates M as N * sin^2(pi * y / 2^p).
 */

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsemigroup/random.hpp"
#include "qsemigroup/register_layout.hpp"

namespace qsemigroup {

using Amplitude = std::complex<double>;
using OraclePredicate = std::function<bool(BasisIndex)>;

enum class SimMode { Dense, Analytic };

inline constexpr unsigned kDefaultDenseQubits = 24;
inline constexpr unsigned kMaxCrosscheckQubits = 14;
inline constexpr unsigned kMaxCountingBits = 24;

class StateVector {
  public:
    /// |0...0> on `qubits` qubits. Throws Error(TooManyQubits).
    explicit StateVector(unsigned qubits, unsigned max_qubits = kDefaultDenseQubits);

    [[nodiscard]] unsigned qubits() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }

    [[nodiscard]] double norm_squared() const;
    /// Total probability of the listed basis states.
    [[nodiscard]] double probability(std::span<const BasisIndex> indices) const;

  private:
    unsigned qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// H^{(x)b}|0>: every amplitude equals 1/sqrt(2^b).
StateVector uniform_state(unsigned b, unsigned max_qubits = kDefaultDenseQubits);

/// One Grover iteration in place: phase flip on `marked`, then 2|g><g| - I.
void apply_grover_iteration(StateVector &state, std::span<const BasisIndex> marked);
void apply_grover_iteration(StateVector &state, const OraclePredicate &oracle);

/// Born-rule measurement in the computational basis (inverse CDF).
BasisIndex measure(const StateVector &state, Rng &rng);

/// Inverse-CDF sampler over a fixed non-negative weight vector.
class DiscreteSampler {
  public:
    explicit DiscreteSampler(std::span<const double> weights);
    [[nodiscard]] std::size_t sample(Rng &rng) const;

  private:
    std::vector<double> cumulative_;
    std::size_t last_positive_ = 0;
};

/// Grover dynamics restricted to the invariant plane.
struct SubspaceState {
    double theta = 0.0;
    /// (2k + 1) theta after k iterations.
    double phase_position = 0.0;
    std::uint64_t dimension = 0;
    Count marked = 0;

    static SubspaceState uniform(std::uint64_t dimension, Count marked);

    void iterate(Count k) { phase_position += 2.0 * static_cast<double>(k) * theta; }

    [[nodiscard]] double success_probability() const;
};

struct SearchOptions {
    SimMode mode = SimMode::Analytic;
    unsigned dense_qubits = kDefaultDenseQubits;
};

/// Final state of a known-M Grover search, prepared once and measured any
/// number of times. Every measurement is an independent run of the search.
class GroverSampler {
  public:
    /// Throws Error(NoSolutions) when marked == 0.
    GroverSampler(const RegisterLayout &layout, Count marked,
                  SearchOptions options = {});

    [[nodiscard]] Count iterations() const noexcept { return iterations_; }
    [[nodiscard]] double success_probability() const noexcept { return success_; }
    [[nodiscard]] BasisIndex sample(Rng &rng) const;

  private:
    std::uint64_t dimension_;
    Count iterations_ = 0;
    double success_ = 0.0;
    std::vector<BasisIndex> marked_;
    std::optional<DiscreteSampler> dense_;
};

BasisIndex grover_search_known(const RegisterLayout &layout, Count marked,
                               std::uint64_t seed, SearchOptions options = {});

struct UnknownSearchResult {
    std::optional<BasisIndex> index;
    Count total_iterations = 0;
    Count runs = 0;
};

/// Iteration budget ceil(9/2 * sqrt(N)) for the unknown-M schedule.
Count unknown_search_cutoff(std::uint64_t dimension);

/// Escalating schedule for an unknown number of solutions: each run draws
/// its iteration count uniformly below m, m grows by 6/5 up to sqrt(N).
/// Returns the first oracle-verified measurement, or no index once the
/// cumulative iteration count reaches unknown_search_cutoff (the run in
/// flight may overshoot it by at most sqrt(N)).
UnknownSearchResult grover_search_unknown(const RegisterLayout &layout,
                                          std::uint64_t seed,
                                          SearchOptions options = {});

struct CountingResult {
    unsigned p = 0;
    std::uint64_t y = 0;
    double m_estimate = 0.0;
    Count m_rounded = 0;
    double error_bound = 0.0;
};

/// ceil(b / 2) + 2, so that 2^p grows like sqrt(2^b).
unsigned default_counting_bits(unsigned b);

/// Estimate N sin^2(pi y / 2^p) and the bound
/// 2 pi sqrt(M~ N) / 2^p + pi^2 N / 2^{2p}.
CountingResult counting_result(std::uint64_t dimension, unsigned p, std::uint64_t y);

/// Exact distribution of the counting-register outcome y in 0..2^p - 1.
/// Throws Error(InvalidArgument) unless 0 <= marked <= dimension and
/// 1 <= p <= kMaxCountingBits.
std::vector<double> counting_distribution(std::uint64_t dimension, Count marked,
                                          unsigned p);

/// Literal circuit on b + p qubits: Hadamards, controlled G^{2^k} powers,
/// gate-level inverse Fourier transform, then the marginal on the counting
/// register. Throws Error(TooManyQubits) when b + p > kMaxCrosscheckQubits.
std::vector<double> dense_counting_crosscheck(unsigned b, unsigned p,
                                              const OraclePredicate &oracle);

/// Samples one counting outcome. Analytic mode takes M from an oracle sweep
/// (or the classical denumerant beyond the sweep limit); dense mode runs
/// dense_counting_crosscheck.
CountingResult quantum_count(const RegisterLayout &layout, unsigned p,
                             std::uint64_t seed, SimMode mode = SimMode::Analytic);

/// Marked count of the layout as known to the analytic simulator.
Count layout_marked_count(const RegisterLayout &layout);

} // namespace qsemigroup
