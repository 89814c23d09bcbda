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
 * Numerical semigroups and their classical invariants.
 *
 * A numerical semigroup S = <a_1, ..., a_n> is the set of all non-negative
 * integer combinations of coprime generators. Everything here is exact and
 * pseudo-polynomial (dynamic programming over 0..t), and serves as ground
 * truth for the simulated quantum routines.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qsemigroup {

using Integer = std::int64_t;
using Count = std::uint64_t;

/// Largest value window the dynamic-programming routines will allocate.
inline constexpr Integer kMaxDpWindow = Integer{1} << 28;

class NumericalSemigroup {
  public:
    /// Validates `raw` and reduces it to the minimal system of generators.
    /// Throws Error(EmptyInput | InvalidArgument | GcdNotOne).
    static NumericalSemigroup from_generators(std::span<const Integer> raw);

    [[nodiscard]] const std::vector<Integer> &generators() const noexcept {
        return generators_;
    }
    [[nodiscard]] std::size_t embedding_dimension() const noexcept {
        return generators_.size();
    }
    [[nodiscard]] Integer multiplicity() const noexcept {
        return generators_.front();
    }
    [[nodiscard]] Integer largest_generator() const noexcept {
        return generators_.back();
    }

    friend bool operator==(const NumericalSemigroup &,
                           const NumericalSemigroup &) = default;

  private:
    explicit NumericalSemigroup(std::vector<Integer> gens)
        : generators_(std::move(gens)) {}

    std::vector<Integer> generators_;
};

struct Factorization {
    std::vector<Integer> lambdas;
    Integer value = 0;

    friend bool operator==(const Factorization &,
                           const Factorization &) = default;
};

struct InvariantReport {
    std::vector<Integer> generators;
    Integer frobenius = -1;
    Count genus = 0;
    Integer multiplicity = 0;
    std::size_t embedding_dimension = 0;
    std::vector<Integer> gaps;
};

NumericalSemigroup make_semigroup(std::span<const Integer> raw);

/// Keeps g iff g is not a non-negative combination of the smaller kept
/// generators. Input must be sorted ascending and coprime.
std::vector<Integer> minimal_system(std::span<const Integer> sorted_gens);

bool contains(const NumericalSemigroup &s, Integer t);

/// Largest gap, or -1 when S = <1> has none.
Integer frobenius(const NumericalSemigroup &s);

std::vector<Integer> gaps(const NumericalSemigroup &s);
Count genus(const NumericalSemigroup &s);

/// Entry r is the least element of S congruent to r mod `element`.
/// Throws Error(NotAMember) unless `element` is a positive member of S.
std::vector<Integer> apery_set(const NumericalSemigroup &s, Integer element);

/// Number of non-negative solutions of sum(lambda_i * a_i) = t.
Count denumerant(const NumericalSemigroup &s, Integer t);

/// All factorizations of t, ordered lexicographically by
/// (lambda_n, lambda_{n-1}, ..., lambda_1) ascending.
std::vector<Factorization> enumerate_factorizations(const NumericalSemigroup &s,
                                                    Integer t);

/// denumerant(s, t) for every t in 0..bound.
std::vector<Count> denumerant_table(const NumericalSemigroup &s, Integer bound);

InvariantReport invariant_report(const NumericalSemigroup &s);

/// Upper bound a_1 * a_n of the window that contains every gap.
Integer gap_window(const NumericalSemigroup &s);

} // namespace qsemigroup
