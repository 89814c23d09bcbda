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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qsemigroup/error.hpp"
#include "qsemigroup/quantum_sim.hpp"

using namespace qsemigroup;

namespace {

NumericalSemigroup S(std::vector<Integer> gens) { return make_semigroup(gens); }

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected qsemigroup::Error");
    return ErrorKind::IoError;
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::vector<BasisIndex> random_marked(std::mt19937_64 &rng, unsigned b) {
    const std::size_t n = std::size_t{1} << b;
    std::vector<BasisIndex> marked;
    const std::size_t m = rng() % (n + 1);
    std::vector<BasisIndex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    marked.assign(all.begin(), all.begin() + m);
    std::sort(marked.begin(), marked.end());
    return marked;
}

} // namespace

TEST_CASE("uniform_state") {
    const auto s3 = uniform_state(3);
    CHECK(s3.size() == 8);
    for (const auto &a : s3.amplitudes()) {
        CHECK(a.real() == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-15));
        CHECK(a.imag() == 0.0);
    }
    const auto s1 = uniform_state(1);
    CHECK(s1.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    const auto s20 = uniform_state(20);
    CHECK(std::abs(s20.norm_squared() - 1.0) < 1e-9);
    CHECK(kind_of([] { uniform_state(25); }) == ErrorKind::TooManyQubits);
    CHECK(kind_of([] { uniform_state(8, 4); }) == ErrorKind::TooManyQubits);
}

TEST_CASE("apply_grover_iteration") {
    SUBCASE("no marked states leaves the uniform state fixed") {
        auto state = uniform_state(6);
        const auto before = std::vector<Amplitude>(state.amplitudes().begin(),
                                                   state.amplitudes().end());
        apply_grover_iteration(state, std::vector<BasisIndex>{});
        for (std::size_t j = 0; j < state.size(); ++j) {
            CHECK(std::abs(state.amplitudes()[j] - before[j]) < 1e-12);
        }
    }
    SUBCASE("N = 4, M = 1 reaches the marked state in one step") {
        auto state = uniform_state(2);
        apply_grover_iteration(state, std::vector<BasisIndex>{3});
        CHECK(std::abs(state.amplitudes()[3] - Amplitude{1.0, 0.0}) < 1e-12);
    }
    SUBCASE("b = 5, marked {8, 17}, three steps") {
        auto state = uniform_state(5);
        const std::vector<BasisIndex> marked{8, 17};
        for (int k = 0; k < 3; ++k) {
            apply_grover_iteration(state, marked);
        }
        CHECK(state.probability(marked) == doctest::Approx(0.961).epsilon(1e-3));
        CHECK(std::abs(state.probability(marked) - oracles::grover_closed_form(32, 2, 3)) <
              1e-12);
    }
    SUBCASE("predicate and index-list oracles agree") {
        auto a = uniform_state(7);
        auto b = uniform_state(7);
        const std::vector<BasisIndex> marked{3, 40, 99};
        for (int k = 0; k < 4; ++k) {
            apply_grover_iteration(a, marked);
            apply_grover_iteration(b, [&](BasisIndex j) {
                return std::binary_search(marked.begin(), marked.end(), j);
            });
        }
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(std::abs(a.amplitudes()[j] - b.amplitudes()[j]) < 1e-14);
        }
    }
}

TEST_CASE("property: dense Grover follows sin^2((2k+1) theta) and keeps norm") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        const unsigned b = 1 + rng() % 10;
        const auto marked = random_marked(rng, b);
        auto state = uniform_state(b);
        const Count iters = rng() % 12;
        for (Count k = 1; k <= iters; ++k) {
            apply_grover_iteration(state, marked);
            REQUIRE(std::abs(state.norm_squared() - 1.0) < 1e-9);
            REQUIRE(std::abs(state.probability(marked) -
                             oracles::grover_closed_form(state.size(), marked.size(), k)) <
                    1e-9);
        }
    }
}

TEST_CASE("SubspaceState tracks the dense simulation") {
    auto plane = SubspaceState::uniform(32, 2);
    CHECK(plane.theta == doctest::Approx(std::asin(0.25)));
    plane.iterate(3);
    CHECK(plane.success_probability() == doctest::Approx(0.9613189697265625).epsilon(1e-12));
    CHECK(SubspaceState::uniform(8, 0).success_probability() == 0.0);
    CHECK(SubspaceState::uniform(8, 8).theta == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("measurement sampling is seeded and follows the Born rule") {
    auto state = uniform_state(5);
    const std::vector<BasisIndex> marked{8, 17};
    for (int k = 0; k < 3; ++k) {
        apply_grover_iteration(state, marked);
    }
    Rng a(42), b(42);
    std::vector<BasisIndex> seq_a, seq_b;
    int hits = 0;
    for (int i = 0; i < 4000; ++i) {
        seq_a.push_back(measure(state, a));
        seq_b.push_back(measure(state, b));
        hits += seq_a.back() == 8 || seq_a.back() == 17;
    }
    CHECK(seq_a == seq_b);
    // 0.961 +- 3 sigma for 4000 draws.
    CHECK(hits / 4000.0 == doctest::Approx(0.9613).epsilon(0.01));
}

TEST_CASE("DiscreteSampler") {
    const std::vector<double> w{0.0, 1.0, 0.0, 3.0, 0.0};
    const DiscreteSampler sampler(w);
    Rng rng(1);
    int ones = 0, threes = 0;
    for (int i = 0; i < 20000; ++i) {
        const auto k = sampler.sample(rng);
        REQUIRE((k == 1 || k == 3));
        (k == 1 ? ones : threes)++;
    }
    CHECK(ones / 20000.0 == doctest::Approx(0.25).epsilon(0.05));
    CHECK(kind_of([] { DiscreteSampler(std::vector<double>{0.0, 0.0}); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("grover_search_known") {
    const auto l14 = build_layout(S({5, 7, 9}), 14);
    for (SimMode mode : {SimMode::Dense, SimMode::Analytic}) {
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 2000; ++seed) {
            const BasisIndex j = grover_search_known(l14, 2, seed, {mode});
            hits += j == 8 || j == 17;
        }
        CHECK(hits / 2000.0 == doctest::Approx(0.9613).epsilon(0.02));
    }
    CHECK(grover_search_known(l14, 2, 5, {SimMode::Dense}) ==
          grover_search_known(l14, 2, 5, {SimMode::Dense}));

    // N = 4, M = 1: <3, 4>, t = 4 -> widths {1, 1}, lambda = (0, 1) is index 2.
    const auto exact = build_layout(S({3, 4}), 4);
    REQUIRE(exact.total_bits() == 2);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(grover_search_known(exact, 1, seed, {SimMode::Dense}) == 2);
        CHECK(grover_search_known(exact, 1, seed, {SimMode::Analytic}) == 2);
    }
    CHECK(kind_of([&] { grover_search_known(l14, 0, 1); }) == ErrorKind::NoSolutions);
}

TEST_CASE("GroverSampler analytic and dense distributions agree") {
    const auto l = build_layout(S({4, 7, 10}), 40);
    const Count m = marked_count(l);
    REQUIRE(m > 0);
    const GroverSampler dense(l, m, {SimMode::Dense});
    const GroverSampler plane(l, m, {SimMode::Analytic});
    CHECK(dense.iterations() == plane.iterations());
    CHECK(std::abs(dense.success_probability() - plane.success_probability()) < 1e-9);
}

TEST_CASE("grover_search_unknown") {
    const auto l14 = build_layout(S({5, 7, 9}), 14);
    for (SimMode mode : {SimMode::Dense, SimMode::Analytic}) {
        double total = 0;
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const auto r = grover_search_unknown(l14, seed, {mode});
            REQUIRE(r.index);
            CHECK((*r.index == 8 || *r.index == 17));
            CHECK(r.total_iterations <= unknown_search_cutoff(32) + 6);
            total += static_cast<double>(r.total_iterations);
        }
        CHECK(total / 300.0 <= 9.0 * std::sqrt(32.0 / 2.0));
    }

    const auto l13 = build_layout(S({5, 7, 9}), 13);
    for (SimMode mode : {SimMode::Dense, SimMode::Analytic}) {
        const auto r = grover_search_unknown(l13, 3, {mode});
        CHECK_FALSE(r.index);
        CHECK(r.total_iterations >= unknown_search_cutoff(l13.dimension()));
    }

    const auto lgen = build_layout(S({5, 7, 9}), 5);
    const auto r = grover_search_unknown(lgen, 11);
    REQUIRE(r.index);
    CHECK(*r.index == lgen.encode(std::vector<Integer>{1, 0, 0}));

    CHECK(unknown_search_cutoff(32) == 26);
}

TEST_CASE("counting_distribution") {
    const auto zero = counting_distribution(32, 0, 5);
    CHECK(zero[0] == doctest::Approx(1.0));
    CHECK(std::accumulate(zero.begin() + 1, zero.end(), 0.0) < 1e-12);

    const auto d = counting_distribution(32, 2, 7);
    CHECK(std::abs(std::accumulate(d.begin(), d.end(), 0.0) - 1.0) < 1e-9);
    const auto modal = std::max_element(d.begin(), d.end()) - d.begin();
    CHECK((modal == 10 || modal == 118));
    CHECK(d[10] == doctest::Approx(0.3722749944519415).epsilon(1e-9));
    CHECK(d[118] == doctest::Approx(0.3722749944519415).epsilon(1e-9));
    CHECK(counting_result(32, 7, 10).m_rounded == 2);
    CHECK(counting_result(32, 7, 10).m_estimate == doctest::Approx(1.8892597704263192));

    const auto small = counting_distribution(4, 1, 2);
    const std::vector<double> expected{0.1875, 0.375, 0.0625, 0.375};
    CHECK(max_abs_diff(small, expected) < 1e-12);

    const auto all = counting_distribution(4, 4, 3);
    CHECK(all[4] == doctest::Approx(1.0));

    CHECK(kind_of([] { counting_distribution(4, 5, 3); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { counting_distribution(4, 1, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("property: counting distribution matches explicit sums, is normalized and mirrored") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 30; ++rep) {
        const unsigned b = 1 + rng() % 12;
        const std::uint64_t n = std::uint64_t{1} << b;
        const Count m = rng() % (n + 1);
        const unsigned p = 1 + rng() % 8;
        const auto d = counting_distribution(n, m, p);
        CHECK(max_abs_diff(d, oracles::counting_by_sum(n, m, p)) < 1e-9);
        CHECK(std::abs(std::accumulate(d.begin(), d.end(), 0.0) - 1.0) < 1e-9);
        if (m > 0 && m < n) {
            for (std::size_t y = 1; y < d.size(); ++y) {
                REQUIRE(std::abs(d[y] - d[d.size() - y]) < 1e-12);
            }
        }
    }
}

TEST_CASE("dense_counting_crosscheck") {
    const auto l14 = build_layout(S({5, 7, 9}), 14);
    const auto dense =
        dense_counting_crosscheck(5, 7, [&](BasisIndex j) { return l14.oracle(j); });
    CHECK(max_abs_diff(dense, counting_distribution(32, 2, 7)) <= 1e-9);

    const auto none = dense_counting_crosscheck(2, 2, [](BasisIndex) { return false; });
    CHECK(none[0] == doctest::Approx(1.0));

    const auto all = dense_counting_crosscheck(2, 3, [](BasisIndex) { return true; });
    CHECK(max_abs_diff(all, counting_distribution(4, 4, 3)) < 1e-9);
    CHECK(all[4] == doctest::Approx(1.0));

    CHECK(kind_of([] { dense_counting_crosscheck(8, 7, [](BasisIndex) { return false; }); }) ==
          ErrorKind::TooManyQubits);
}

TEST_CASE("property: dense circuit agrees with the analytic distribution") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        const unsigned b = 1 + rng() % 6;
        const unsigned p = 1 + rng() % (kMaxCrosscheckQubits - b < 7 ? kMaxCrosscheckQubits - b : 7);
        const auto marked = random_marked(rng, b);
        const auto dense = dense_counting_crosscheck(b, p, [&](BasisIndex j) {
            return std::binary_search(marked.begin(), marked.end(), j);
        });
        CHECK(max_abs_diff(dense, counting_distribution(std::uint64_t{1} << b,
                                                        marked.size(), p)) < 1e-9);
    }
}

TEST_CASE("quantum_count") {
    const auto l14 = build_layout(S({5, 7, 9}), 14);
    std::vector<Count> rounded;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto r = quantum_count(l14, 7, seed);
        REQUIRE(r.y < 128);
        REQUIRE(r.m_estimate >= 0.0);
        REQUIRE(r.m_estimate <= 32.0);
        rounded.push_back(r.m_rounded);
    }
    std::nth_element(rounded.begin(), rounded.begin() + 500, rounded.end());
    CHECK(rounded[500] == 2);

    const auto l13 = build_layout(S({5, 7, 9}), 13);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(quantum_count(l13, 7, seed).m_estimate == 0.0);
    }

    // Dense verification mode samples the same distribution.
    CHECK(quantum_count(l14, 7, 77, SimMode::Dense).y ==
          quantum_count(l14, 7, 77, SimMode::Analytic).y);
    CHECK(kind_of([&] { quantum_count(l14, 10, 1, SimMode::Dense); }) ==
          ErrorKind::TooManyQubits);

    const auto r = counting_result(1u << 20, 12, 4);
    CHECK(r.m_estimate == doctest::Approx(9.869573435612118).epsilon(1e-9));
    CHECK(r.error_bound ==
          doctest::Approx(2 * std::numbers::pi * std::sqrt(r.m_estimate * 1048576.0) / 4096 +
                          std::numbers::pi * std::numbers::pi * 1048576.0 / (4096.0 * 4096.0)));
}

TEST_CASE("Rng sub-seeds are deterministic and distinct") {
    CHECK(Rng::derive(1, 0) == Rng::derive(1, 0));
    CHECK(Rng::derive(1, 0) != Rng::derive(1, 1));
    CHECK(Rng::derive(1, 0) != Rng::derive(2, 0));
    Rng a(9), b(9);
    for (int i = 0; i < 10; ++i) {
        CHECK(a.next() == b.next());
    }
}
