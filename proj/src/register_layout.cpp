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
#include "qsemigroup/register_layout.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsemigroup/checked.hpp"
#include "qsemigroup/error.hpp"

namespace qsemigroup {

unsigned field_width(Integer t, Integer a) {
    // 2^k <= t/a  <=>  2^k <= floor(t/a), so the real-valued floor(log2(t/a))
    // equals bit_width(floor(t/a)) - 1.
    const auto quotient = static_cast<std::uint64_t>(t / a);
    return std::max(1U, static_cast<unsigned>(std::bit_width(quotient)));
}

double register_bound(const NumericalSemigroup &s, Integer t) {
    const double n = static_cast<double>(s.embedding_dimension());
    double bound = n * (1.0 + std::log2(static_cast<double>(t)));
    for (Integer a : s.generators()) {
        bound -= std::log2(static_cast<double>(a));
    }
    return bound;
}

RegisterLayout::RegisterLayout(const NumericalSemigroup &s, Integer target,
                               unsigned max_bits)
    : generators_(s.generators()), target_(target) {
    if (target < 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "register layout needs t >= 1, got " + std::to_string(target));
    }
    max_bits = std::min(max_bits, kMaxLayoutBits);
    widths_.reserve(generators_.size());
    offsets_.reserve(generators_.size());
    for (Integer a : generators_) {
        const unsigned w = field_width(target, a);
        offsets_.push_back(total_bits_);
        widths_.push_back(w);
        total_bits_ += w;
        if (total_bits_ > max_bits) {
            throw Error(ErrorKind::TargetTooLarge,
                        "search register needs more than " +
                            std::to_string(max_bits) + " qubits");
        }
    }
    // Clamped fields (t < a_i) can exceed the real-valued bound, so it is
    // only guaranteed once t >= a_n.
    if (target >= s.largest_generator() &&
        static_cast<double>(total_bits_) > register_bound(s, target) + 1e-9) {
        throw std::logic_error("register width exceeds n(1 + log2 t) - sum log2 a_i");
    }
}

std::vector<Integer> RegisterLayout::decode(BasisIndex j) const {
    if (j >= dimension()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "basis index " + std::to_string(j) + " outside 2^" +
                        std::to_string(total_bits_));
    }
    std::vector<Integer> lambdas(widths_.size());
    for (std::size_t i = 0; i < widths_.size(); ++i) {
        const BasisIndex mask = (BasisIndex{1} << widths_[i]) - 1;
        lambdas[i] = static_cast<Integer>((j >> offsets_[i]) & mask);
    }
    return lambdas;
}

BasisIndex RegisterLayout::encode(std::span<const Integer> lambdas) const {
    if (lambdas.size() != widths_.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "expected " + std::to_string(widths_.size()) +
                        " multiplicities, got " + std::to_string(lambdas.size()));
    }
    BasisIndex j = 0;
    for (std::size_t i = 0; i < widths_.size(); ++i) {
        const Integer lambda = lambdas[i];
        if (lambda < 0 || static_cast<std::uint64_t>(lambda) >> widths_[i] != 0) {
            throw Error(ErrorKind::FieldOverflow,
                        "lambda_" + std::to_string(i + 1) + " = " +
                            std::to_string(lambda) + " does not fit in " +
                            std::to_string(widths_[i]) + " bits");
        }
        j |= static_cast<BasisIndex>(lambda) << offsets_[i];
    }
    return j;
}

bool RegisterLayout::oracle(BasisIndex j) const {
    if (j >= dimension()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "basis index " + std::to_string(j) + " outside register");
    }
    Integer sum = 0;
    for (std::size_t i = 0; i < widths_.size(); ++i) {
        const BasisIndex mask = (BasisIndex{1} << widths_[i]) - 1;
        const auto lambda = static_cast<Integer>((j >> offsets_[i]) & mask);
        Integer term = 0;
        if (__builtin_mul_overflow(lambda, generators_[i], &term) ||
            __builtin_add_overflow(sum, term, &sum) || sum > target_) {
            return false;
        }
    }
    return sum == target_;
}

RegisterLayout build_layout(const NumericalSemigroup &s, Integer t,
                            unsigned max_bits) {
    return RegisterLayout(s, t, max_bits);
}

std::vector<BasisIndex> sweep_marked(const RegisterLayout &layout,
                                     unsigned sweep_limit) {
    if (layout.total_bits() > sweep_limit) {
        throw Error(ErrorKind::SweepTooLarge,
                    "oracle sweep over 2^" + std::to_string(layout.total_bits()) +
                        " states exceeds the limit 2^" + std::to_string(sweep_limit));
    }
    std::vector<BasisIndex> marked;
    const BasisIndex n = layout.dimension();
    for (BasisIndex j = 0; j < n; ++j) {
        if (layout.oracle(j)) {
            marked.push_back(j);
        }
    }
    return marked;
}

Count marked_count(const RegisterLayout &layout, unsigned sweep_limit) {
    return sweep_marked(layout, sweep_limit).size();
}

std::vector<BasisIndex> encoded_solutions(const RegisterLayout &layout) {
    const auto s = NumericalSemigroup::from_generators(layout.generators());
    std::vector<BasisIndex> marked;
    for (const Factorization &f : enumerate_factorizations(s, layout.target())) {
        marked.push_back(layout.encode(f.lambdas));
    }
    std::sort(marked.begin(), marked.end());
    return marked;
}

Count isqrt(Count n) {
    auto r = static_cast<Count>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

Count optimal_grover_iterations(std::uint64_t dimension, Count marked) {
    if (marked == 0) {
        return 0;
    }
    const double ratio = std::min(
        1.0, static_cast<double>(marked) / static_cast<double>(dimension));
    const double theta = std::asin(std::sqrt(ratio));
    return static_cast<Count>(std::floor(std::numbers::pi / (4.0 * theta)));
}

IterationEstimate iteration_estimate(const NumericalSemigroup &s, Integer t,
                                     std::optional<Count> marked) {
    if (t < 1) {
        throw Error(ErrorKind::InvalidArgument, "iteration estimate needs t >= 1");
    }
    IterationEstimate est;
    est.classical = 1;
    for (Integer a : s.generators()) {
        est.classical = detail::checked_mul(est.classical,
                                            static_cast<Count>(t / a) + 1);
    }
    est.quantum_sqrt = isqrt(est.classical);
    if (marked && *marked >= 1) {
        const RegisterLayout layout(s, t);
        est.grover_optimal =
            std::max<Count>(1, optimal_grover_iterations(layout.dimension(), *marked));
    }
    return est;
}

} // namespace qsemigroup
