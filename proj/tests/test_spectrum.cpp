// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qgl/embeddings.hpp"
#include "qgl/kernels.hpp"
#include "qgl/rng.hpp"
#include "qgl/spectrum.hpp"

using namespace qgl;
using qgl::testing::naive_spectrum;
using qgl::testing::random_qubo;

TEST_CASE("enumerate_spectrum on the two-point clustering instance") {
    QuboInstance q(2);
    q.set(0, 0, -1);
    q.set(0, 1, 2);
    q.set(1, 1, -1);
    SpectrumSummary s = enumerate_spectrum(q);
    CHECK(s.min_energy == doctest::Approx(-1.0));
    REQUIRE(s.second_energy.has_value());
    CHECK(*s.second_energy == doctest::Approx(0.0));
    CHECK(*s.gap == doctest::Approx(1.0));
    CHECK(s.ground_degeneracy == 2);
    CHECK(s.ground_state == std::vector<int>{1, 0});
}

TEST_CASE("enumerate_spectrum constant spectrum has no gap") {
    SpectrumSummary s = enumerate_spectrum(QuboInstance(3));
    CHECK(s.min_energy == 0.0);
    CHECK_FALSE(s.second_energy.has_value());
    CHECK_FALSE(s.gap.has_value());
    CHECK(s.ground_degeneracy == 8);
    CHECK(s.ground_state == std::vector<int>{0, 0, 0});
}

TEST_CASE("enumerate_spectrum nonnegative diagonal") {
    QuboInstance q(3);
    q.set(0, 0, 1);
    q.set(1, 1, 2);
    q.set(2, 2, 3);
    SpectrumSummary s = enumerate_spectrum(q);
    CHECK(s.min_energy == 0.0);
    CHECK(*s.second_energy == doctest::Approx(1.0));
    CHECK(*s.gap == doctest::Approx(1.0));
    CHECK(s.ground_degeneracy == 1);
    CHECK(s.ground_state == std::vector<int>{0, 0, 0});
}

TEST_CASE("spectral_gap wrapper") {
    QuboInstance q(2);
    q.set(0, 0, -0.5);
    q.set(0, 1, 1.0);
    q.set(1, 1, -0.5);
    auto gap = spectral_gap(q);
    REQUIRE(gap.has_value());
    CHECK(*gap == doctest::Approx(0.5));

    CHECK_FALSE(spectral_gap(QuboInstance(2)).has_value());

    QuboInstance svm(2);
    svm.set(0, 0, -0.85);
    svm.set(0, 1, -0.2);
    svm.set(1, 1, -0.85);
    CHECK(*spectral_gap(svm) == doctest::Approx(1.05));
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_spectrum(QuboInstance(29)), contract_error);
    CHECK_THROWS_AS(spectral_gap(QuboInstance(33), {0, true}), contract_error);
}

TEST_CASE("oracle equivalence against naive full evaluation") {
    SplitMix64Stream rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 12);
        QuboInstance q = random_qubo(n, rng);
        SpectrumSummary fast = enumerate_spectrum(q);
        auto naive = naive_spectrum(q);
        CHECK(std::abs(fast.min_energy - naive.min_energy) < 1e-9);
        CHECK(fast.ground_degeneracy == naive.degeneracy);
        REQUIRE(fast.second_energy.has_value() == naive.has_second);
        if (naive.has_second) {
            CHECK(std::abs(*fast.second_energy - naive.second_energy) < 1e-9);
            CHECK(std::abs(*fast.gap - (naive.second_energy - naive.min_energy)) < 1e-9);
        }
        std::uint64_t word = 0;
        for (int i = 0; i < n; ++i) word |= std::uint64_t{fast.ground_state[i] ? 1u : 0u} << i;
        CHECK(word == naive.best_word);
    }
}

TEST_CASE("results are identical across worker counts") {
    SplitMix64Stream rng(103);
    for (int n : {6, 13, 15}) {
        QuboInstance q = random_qubo(n, rng);
        SpectrumSummary one = enumerate_spectrum(q, {1, false});
        SpectrumSummary two = enumerate_spectrum(q, {2, false});
        SpectrumSummary many = enumerate_spectrum(q, {16, false});
        for (const SpectrumSummary* s : {&two, &many}) {
            CHECK(s->min_energy == one.min_energy);
            CHECK(s->ground_degeneracy == one.ground_degeneracy);
            CHECK(s->ground_state == one.ground_state);
            REQUIRE(s->second_energy.has_value() == one.second_energy.has_value());
            if (one.second_energy) CHECK(*s->second_energy == *one.second_energy);
        }
    }
}

TEST_CASE("gap scales covariantly with the instance") {
    SplitMix64Stream rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng.next_u64() % 9);
        QuboInstance q = random_qubo(n, rng);
        double c = rng.next_uniform(0.1, 5.0);
        QuboInstance scaled(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) scaled.set(i, j, c * q.at(i, j));
        }
        auto g = spectral_gap(q);
        auto gs = spectral_gap(scaled);
        REQUIRE(g.has_value());
        REQUIRE(gs.has_value());
        CHECK(*gs == doctest::Approx(c * *g).epsilon(1e-9));
    }
}

TEST_CASE("clustering instances: even degeneracy and half-space symmetry") {
    SplitMix64Stream rng(109);
    for (int n : {4, 8, 12}) {
        KernelMatrix km;
        km.n = n;
        km.values.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double v = rng.next_uniform(-1, 1);
                km.values[static_cast<std::size_t>(i) * n + j] = v;
                km.values[static_cast<std::size_t>(j) * n + i] = v;
            }
        }
        QuboInstance q = clustering_qubo(center_kernel(km));
        SpectrumSummary s = enumerate_spectrum(q);
        CHECK(s.ground_degeneracy >= 2);
        CHECK(s.ground_degeneracy % 2 == 0);

        // Complement symmetry: every energy value occurs in the half-space
        // {z : z_0 = 0}, so the gap computed there matches the full gap.
        std::vector<double> half;
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            if ((w & 1u) == 0) half.push_back(energy(q, w));
        }
        double half_min = *std::min_element(half.begin(), half.end());
        bool half_has_second = false;
        double half_second = 0.0;
        for (double e : half) {
            if (e > half_min + 1e-12 && (!half_has_second || e < half_second)) {
                half_has_second = true;
                half_second = e;
            }
        }
        REQUIRE(s.gap.has_value() == half_has_second);
        if (half_has_second) {
            CHECK(*s.gap == doctest::Approx(half_second - half_min).epsilon(1e-9));
        }
    }
}

TEST_CASE("degenerate near-equal energies are banded at 1e-12") {
    QuboInstance q(2);
    q.set(0, 0, 1.0);
    q.set(1, 1, 1.0 + 5e-13);  // within the degeneracy band of each other
    SpectrumSummary s = enumerate_spectrum(q);
    CHECK(s.min_energy == 0.0);
    CHECK(s.ground_degeneracy == 1);
    REQUIRE(s.second_energy.has_value());
    CHECK(*s.second_energy == doctest::Approx(1.0));

    // energies: 0 at (0,0), -1 at (1,0), -1+5e-13 at (0,1), 5e-13 at (1,1):
    // the two near-equal values share the ground band, second level is 0.
    QuboInstance tie(2);
    tie.set(0, 0, -1.0);
    tie.set(0, 1, 2.0);
    tie.set(1, 1, -1.0 + 5e-13);
    SpectrumSummary t = enumerate_spectrum(tie);
    CHECK(t.min_energy == -1.0);
    CHECK(t.ground_degeneracy == 2);
    CHECK(t.ground_state == std::vector<int>{1, 0});
    REQUIRE(t.second_energy.has_value());
    CHECK(*t.second_energy == doctest::Approx(0.0));
}
