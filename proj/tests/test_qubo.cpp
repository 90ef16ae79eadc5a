// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "qgl/qubo.hpp"
#include "qgl/rng.hpp"

using namespace qgl;
using qgl::testing::random_qubo;
using qgl::testing::unpack_state;

namespace {

QuboInstance make2(double q00, double q01, double q11) {
    QuboInstance q(2);
    q.set(0, 0, q00);
    q.set(0, 1, q01);
    q.set(1, 1, q11);
    return q;
}

}  // namespace

TEST_CASE("energy evaluates the upper-triangular quadratic form") {
    QuboInstance zero(3);
    CHECK(energy(zero, {1, 0, 1}) == 0.0);

    QuboInstance q = make2(1, 2, 3);
    CHECK(energy(q, {1, 1}) == doctest::Approx(6.0));
    CHECK(energy(q, {0, 1}) == doctest::Approx(3.0));
    CHECK(energy(q, {0, 0}) == 0.0);

    CHECK_THROWS_AS(energy(q, {1, 0, 1}), contract_error);
    CHECK_THROWS_AS(energy(q, {1, 2}), contract_error);
}

TEST_CASE("packed-word energy matches the vector form") {
    SplitMix64Stream rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 8);
        QuboInstance q = random_qubo(n, rng);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            CHECK(energy(q, w) == doctest::Approx(energy(q, unpack_state(w, n))).epsilon(1e-12));
        }
    }
}

TEST_CASE("flip_delta closed form") {
    QuboInstance q = make2(1, 2, 3);
    CHECK(flip_delta(q, {0, 0}, 0) == doctest::Approx(1.0));
    CHECK(flip_delta(q, {0, 1}, 0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(flip_delta(q, {0, 1}, 2), contract_error);
    CHECK_THROWS_AS(flip_delta(q, {0, 1}, -1), contract_error);
}

TEST_CASE("flip_delta equals the direct energy difference") {
    SplitMix64Stream rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 10);
        QuboInstance q = random_qubo(n, rng);
        std::vector<int> z(n);
        for (int i = 0; i < n; ++i) z[i] = static_cast<int>(rng.next_u64() & 1u);
        int i = static_cast<int>(rng.next_u64() % n);

        std::vector<int> zf = z;
        zf[i] = 1 - zf[i];
        double direct = energy(q, zf) - energy(q, z);
        CHECK(std::abs(flip_delta(q, z, i) - direct) < 1e-9);  // 1e-9 absolute
    }
}

TEST_CASE("to_ising single variable") {
    QuboInstance q(1);
    q.set(0, 0, 3.5);
    IsingInstance m = to_ising(q);
    CHECK(m.fields[0] == doctest::Approx(1.75));
    CHECK(m.offset == doctest::Approx(1.75));
}

TEST_CASE("to_ising zero matrix stays zero") {
    IsingInstance m = to_ising(QuboInstance(4));
    CHECK(m.offset == 0.0);
    for (double h : m.fields) CHECK(h == 0.0);
    for (double j : m.couplings) CHECK(j == 0.0);
}

TEST_CASE("to_ising preserves energies over all states") {
    SplitMix64Stream rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 8);
        QuboInstance q = random_qubo(n, rng);
        IsingInstance m = to_ising(q);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            std::vector<int> z = unpack_state(w, n);
            std::vector<int> s(n);
            for (int i = 0; i < n; ++i) s[i] = 2 * z[i] - 1;
            CHECK(ising_energy(m, s) == doctest::Approx(energy(q, z)).epsilon(1e-9));
        }
    }
}

TEST_CASE("from_symmetric doubles the off-diagonal") {
    std::vector<double> m = {0, -1, -1, 0};
    QuboInstance q = from_symmetric(2, m, {0, 0});
    CHECK(q.at(0, 0) == 0.0);
    CHECK(q.at(0, 1) == doctest::Approx(-2.0));
    CHECK(q.at(1, 1) == 0.0);

    QuboInstance qi = from_symmetric(2, {1, 0, 0, 1}, {1, 1});
    CHECK(qi.at(0, 0) == doctest::Approx(2.0));
    CHECK(qi.at(1, 1) == doctest::Approx(2.0));
    CHECK(qi.at(0, 1) == 0.0);
}

TEST_CASE("from_symmetric rejects asymmetry") {
    std::vector<double> m = {0, 1, 1.001, 0};
    CHECK_THROWS_AS(from_symmetric(2, m, {0, 0}), contract_error);
}

TEST_CASE("from_symmetric preserves the quadratic form on all states") {
    SplitMix64Stream rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 8);
        std::vector<double> m(static_cast<std::size_t>(n) * n);
        std::vector<double> linear(n);
        for (int i = 0; i < n; ++i) {
            linear[i] = rng.next_uniform(-1, 1);
            for (int j = i; j < n; ++j) {
                double v = rng.next_uniform(-1, 1);
                m[static_cast<std::size_t>(i) * n + j] = v;
                m[static_cast<std::size_t>(j) * n + i] = v;
            }
        }
        QuboInstance q = from_symmetric(n, m, linear);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            std::vector<int> z = unpack_state(w, n);
            double expected = 0.0;
            for (int i = 0; i < n; ++i) {
                expected += linear[i] * z[i];
                for (int j = 0; j < n; ++j) {
                    expected += m[static_cast<std::size_t>(i) * n + j] * z[i] * z[j];
                }
            }
            CHECK(energy(q, z) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("normalize_inf scales the largest entry to one") {
    QuboInstance q = make2(-1, 2, -1);
    QuboInstance nq = normalize_inf(q);
    CHECK(nq.at(0, 0) == doctest::Approx(-0.5));
    CHECK(nq.at(0, 1) == doctest::Approx(1.0));
    CHECK(nq.at(1, 1) == doctest::Approx(-0.5));
    CHECK(nq.max_abs() == 1.0);

    // idempotent when the max-abs entry is already 1
    QuboInstance again = normalize_inf(nq);
    for (int i = 0; i < 2; ++i) {
        for (int j = i; j < 2; ++j) CHECK(again.at(i, j) == nq.at(i, j));
    }

    CHECK_THROWS_WITH_AS(normalize_inf(QuboInstance(3)), "degenerate instance, cannot normalize",
                         contract_error);
}

TEST_CASE("normalize_inf preserves the set of minimizers") {
    SplitMix64Stream rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.next_u64() % 10);
        QuboInstance q = random_qubo(n, rng);
        QuboInstance nq = normalize_inf(q);
        double scale = q.max_abs();

        auto naive_q = qgl::testing::naive_spectrum(q);
        auto naive_n = qgl::testing::naive_spectrum(nq);
        CHECK(naive_n.min_energy == doctest::Approx(naive_q.min_energy / scale).epsilon(1e-9));
        CHECK(naive_n.degeneracy == naive_q.degeneracy);
        CHECK(naive_n.best_word == naive_q.best_word);
        if (naive_q.has_second) {
            double gap_q = naive_q.second_energy - naive_q.min_energy;
            double gap_n = naive_n.second_energy - naive_n.min_energy;
            CHECK(gap_n == doctest::Approx(gap_q / scale).epsilon(1e-9));
        }
    }
}

TEST_CASE("qubo text format round-trips") {
    QuboInstance q = make2(-0.5, 1.0, -0.5);
    std::ostringstream os;
    write_qubo(q, os);
    std::istringstream is(os.str());
    QuboInstance back = read_qubo(is);
    REQUIRE(back.n() == 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = i; j < 2; ++j) CHECK(back.at(i, j) == q.at(i, j));
    }
}

TEST_CASE("qubo text format: comments, zeros omitted, errors carry line numbers") {
    std::istringstream ok("# header comment\n3\n0 2 1.25\n# inline\n2 2 -1\n");
    QuboInstance q = read_qubo(ok);
    CHECK(q.n() == 3);
    CHECK(q.at(0, 2) == 1.25);
    CHECK(q.at(2, 2) == -1.0);
    CHECK(q.at(0, 0) == 0.0);

    std::istringstream lower("2\n1 0 1.0\n");
    CHECK_THROWS_AS(read_qubo(lower), io_error);
    std::istringstream dup("2\n0 1 1.0\n0 1 2.0\n");
    CHECK_THROWS_AS(read_qubo(dup), io_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_qubo(empty), io_error);
    std::istringstream bad("2\n0 x 1.0\n");
    try {
        read_qubo(bad);
        CHECK(false);
    } catch (const io_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("17-digit serialization round-trips exotic doubles") {
    SplitMix64Stream rng(41);
    QuboInstance q(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) q.set(i, j, rng.next_uniform(-1e3, 1e3) / 3.0);
    }
    std::ostringstream os;
    write_qubo(q, os);
    std::istringstream is(os.str());
    QuboInstance back = read_qubo(is);
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) CHECK(back.at(i, j) == q.at(i, j));
    }
}
