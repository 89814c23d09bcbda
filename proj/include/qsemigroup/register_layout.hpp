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
 * Mapping between factorization vectors and basis states of a b-qubit
 * search register, plus the classical evaluation of the membership oracle.
 *
 * Field i holds lambda_i in b_i = max(1, 1 + floor(log2(t / a_i))) bits.
 * The field for lambda_1 occupies the least-significant bits of the basis
 * index and each field is little-endian.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsemigroup/semigroup.hpp"

namespace qsemigroup {

using BasisIndex = std::uint64_t;

inline constexpr unsigned kMaxLayoutBits = 62;
inline constexpr unsigned kDefaultSweepBits = 26;

class RegisterLayout {
  public:
    /// Throws Error(InvalidArgument) for t < 1 and Error(TargetTooLarge)
    /// when the register would need more than `max_bits` qubits.
    RegisterLayout(const NumericalSemigroup &s, Integer target,
                   unsigned max_bits = kMaxLayoutBits);

    [[nodiscard]] std::span<const unsigned> widths() const noexcept { return widths_; }
    [[nodiscard]] std::span<const unsigned> offsets() const noexcept { return offsets_; }
    [[nodiscard]] unsigned total_bits() const noexcept { return total_bits_; }
    [[nodiscard]] std::span<const Integer> generators() const noexcept {
        return generators_;
    }
    [[nodiscard]] Integer target() const noexcept { return target_; }
    /// N = 2^b.
    [[nodiscard]] std::uint64_t dimension() const noexcept {
        return std::uint64_t{1} << total_bits_;
    }

    /// Throws Error(IndexOutOfRange) when j >= 2^b.
    [[nodiscard]] std::vector<Integer> decode(BasisIndex j) const;

    /// Throws Error(FieldOverflow) when some lambda_i does not fit its field.
    [[nodiscard]] BasisIndex encode(std::span<const Integer> lambdas) const;

    /// f(j): true iff sum(decode(j)_i * a_i) == t.
    [[nodiscard]] bool oracle(BasisIndex j) const;

  private:
    std::vector<Integer> generators_;
    std::vector<unsigned> widths_;
    std::vector<unsigned> offsets_;
    unsigned total_bits_ = 0;
    Integer target_ = 0;
};

RegisterLayout build_layout(const NumericalSemigroup &s, Integer t,
                            unsigned max_bits = kMaxLayoutBits);

/// Per-generator width max(1, 1 + floor(log2(t / a))).
unsigned field_width(Integer t, Integer a);

/// Real-valued register bound n(1 + log2 t) - sum(log2 a_i).
double register_bound(const NumericalSemigroup &s, Integer t);

inline bool oracle_eval(const RegisterLayout &layout, BasisIndex j) {
    return layout.oracle(j);
}

/// Exhaustive sweep of the oracle over all 2^b basis states.
/// Throws Error(SweepTooLarge) when b exceeds `sweep_limit`.
Count marked_count(const RegisterLayout &layout,
                   unsigned sweep_limit = kDefaultSweepBits);

/// Marked basis indices in ascending order, found by an oracle sweep.
std::vector<BasisIndex> sweep_marked(const RegisterLayout &layout,
                                     unsigned sweep_limit = kDefaultSweepBits);

/// Marked basis indices in ascending order, built by encoding every
/// factorization of t. Works for any register width.
std::vector<BasisIndex> encoded_solutions(const RegisterLayout &layout);

struct IterationEstimate {
    /// Brute-force candidates: prod(floor(t / a_i) + 1).
    Count classical = 0;
    /// floor(sqrt(classical)).
    Count quantum_sqrt = 0;
    /// max(1, floor(pi / (4 theta))) with sin(theta) = sqrt(M / 2^b).
    std::optional<Count> grover_optimal;
};

IterationEstimate iteration_estimate(const NumericalSemigroup &s, Integer t,
                                     std::optional<Count> marked = std::nullopt);

/// floor(pi / (4 theta)) for sin(theta) = sqrt(marked / dimension); 0 if
/// marked is 0.
Count optimal_grover_iterations(std::uint64_t dimension, Count marked);

Count isqrt(Count n);

} // namespace qsemigroup
