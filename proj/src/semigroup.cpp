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
#include "qsemigroup/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qsemigroup/checked.hpp"
#include "qsemigroup/error.hpp"

namespace qsemigroup {
namespace {

void require_window(Integer limit, const char *what) {
    if (limit > kMaxDpWindow) {
        throw Error(ErrorKind::Overflow,
                    std::string(what) + " exceeds the supported DP window of " +
                        std::to_string(kMaxDpWindow));
    }
}

void require_non_negative(Integer t) {
    if (t < 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "target must be non-negative, got " + std::to_string(t));
    }
}

// reach[v] != 0 iff v is a non-negative combination of `gens`, for v <= limit.
std::vector<char> reachability(std::span<const Integer> gens, Integer limit) {
    require_window(limit, "reachability bound");
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    reach[0] = 1;
    for (Integer g : gens) {
        for (Integer v = g; v <= limit; ++v) {
            reach[v] |= reach[v - g];
        }
    }
    return reach;
}

void collect(std::span<const Integer> gens,
             const std::vector<std::vector<char>> &prefix_reach,
             std::size_t index, Integer remaining, std::vector<Integer> &lambdas,
             Integer value, std::vector<Factorization> &out) {
    const Integer a = gens[index];
    const std::vector<char> &below = prefix_reach[index];
    for (Integer lambda = 0; lambda * a <= remaining; ++lambda) {
        const Integer rest = remaining - lambda * a;
        if (!below[rest]) {
            continue;
        }
        lambdas[index] = lambda;
        if (index == 0) {
            out.push_back({lambdas, value});
        } else {
            collect(gens, prefix_reach, index - 1, rest, lambdas, value, out);
        }
    }
    lambdas[index] = 0;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Integer> raw) {
    if (raw.empty()) {
        throw Error(ErrorKind::EmptyInput, "no generators given");
    }
    Integer g = 0;
    for (Integer a : raw) {
        if (a < 1) {
            throw Error(ErrorKind::InvalidArgument,
                        "generators must be positive, got " + std::to_string(a));
        }
        g = std::gcd(g, a);
    }
    if (g != 1) {
        throw Error(ErrorKind::GcdNotOne,
                    "gcd of generators is " + std::to_string(g) +
                        ", not a numerical semigroup");
    }
    std::vector<Integer> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return NumericalSemigroup(minimal_system(sorted));
}

NumericalSemigroup make_semigroup(std::span<const Integer> raw) {
    return NumericalSemigroup::from_generators(raw);
}

std::vector<Integer> minimal_system(std::span<const Integer> sorted_gens) {
    if (sorted_gens.empty()) {
        throw Error(ErrorKind::EmptyInput, "no generators given");
    }
    const Integer limit = sorted_gens.back();
    require_window(limit, "largest generator");
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    reach[0] = 1;
    std::vector<Integer> kept;
    for (Integer g : sorted_gens) {
        if (reach[g]) {
            continue;
        }
        kept.push_back(g);
        for (Integer v = g; v <= limit; ++v) {
            reach[v] |= reach[v - g];
        }
    }
    return kept;
}

Integer gap_window(const NumericalSemigroup &s) {
    return detail::checked_mul(s.multiplicity(), s.largest_generator());
}

bool contains(const NumericalSemigroup &s, Integer t) {
    require_non_negative(t);
    // f(S) <= a_1 a_n - a_1 - a_n, so anything past the window is a member.
    if (t >= gap_window(s)) {
        return true;
    }
    return reachability(s.generators(), t)[t] != 0;
}

std::vector<Integer> gaps(const NumericalSemigroup &s) {
    const Integer window = gap_window(s);
    const std::vector<char> reach = reachability(s.generators(), window);
    std::vector<Integer> out;
    for (Integer v = 0; v <= window; ++v) {
        if (!reach[v]) {
            out.push_back(v);
        }
    }
    return out;
}

Integer frobenius(const NumericalSemigroup &s) {
    const std::vector<Integer> g = gaps(s);
    return g.empty() ? -1 : g.back();
}

Count genus(const NumericalSemigroup &s) { return gaps(s).size(); }

std::vector<Integer> apery_set(const NumericalSemigroup &s, Integer element) {
    if (element < 1 || !contains(s, element)) {
        throw Error(ErrorKind::NotAMember,
                    std::to_string(element) + " is not a positive element of S");
    }
    // Every Apery element is at most f(S) + element < window + element.
    const Integer limit = detail::checked_add(gap_window(s), element);
    const std::vector<char> reach = reachability(s.generators(), limit);
    std::vector<Integer> out(static_cast<std::size_t>(element), -1);
    Integer filled = 0;
    for (Integer v = 0; v <= limit && filled < element; ++v) {
        if (reach[v] && out[v % element] < 0) {
            out[v % element] = v;
            ++filled;
        }
    }
    return out;
}

std::vector<Count> denumerant_table(const NumericalSemigroup &s, Integer bound) {
    require_non_negative(bound);
    require_window(bound, "denumerant bound");
    std::vector<Count> counts(static_cast<std::size_t>(bound) + 1, 0);
    counts[0] = 1;
    for (Integer g : s.generators()) {
        for (Integer v = g; v <= bound; ++v) {
            counts[v] = detail::checked_add(counts[v], counts[v - g]);
        }
    }
    return counts;
}

Count denumerant(const NumericalSemigroup &s, Integer t) {
    return denumerant_table(s, t).back();
}

std::vector<Factorization> enumerate_factorizations(const NumericalSemigroup &s,
                                                    Integer t) {
    require_non_negative(t);
    const std::vector<Integer> &gens = s.generators();
    // prefix_reach[i]: values reachable with the first i generators only.
    std::vector<std::vector<char>> prefix_reach;
    prefix_reach.reserve(gens.size());
    prefix_reach.push_back(reachability({}, t));
    for (std::size_t i = 1; i < gens.size(); ++i) {
        std::vector<char> next = prefix_reach.back();
        const Integer g = gens[i - 1];
        for (Integer v = g; v <= t; ++v) {
            next[v] |= next[v - g];
        }
        prefix_reach.push_back(std::move(next));
    }
    std::vector<Factorization> out;
    std::vector<Integer> lambdas(gens.size(), 0);
    collect(gens, prefix_reach, gens.size() - 1, t, lambdas, t, out);
    return out;
}

InvariantReport invariant_report(const NumericalSemigroup &s) {
    InvariantReport report;
    report.generators = s.generators();
    report.gaps = gaps(s);
    report.frobenius = report.gaps.empty() ? -1 : report.gaps.back();
    report.genus = report.gaps.size();
    report.multiplicity = s.multiplicity();
    report.embedding_dimension = s.embedding_dimension();
    return report;
}

} // namespace qsemigroup
