// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "qgl/annealing.hpp"
#include "qgl/datagen.hpp"
#include "qgl/kernels.hpp"
#include "qgl/rng.hpp"

using namespace qgl;

namespace {

DataSet points_only(std::vector<std::array<double, 2>> pts) {
    DataSet ds;
    ds.points = std::move(pts);
    ds.labels.assign(ds.points.size(), 1);
    ds.generator = "fixture";
    return ds;
}

double min_eigenvalue(const KernelMatrix& km) {
    DenseHamiltonian h;
    h.dim = static_cast<std::size_t>(km.n);
    h.entries = km.values;
    return eigenvalues_symmetric(h).front();
}

}  // namespace

TEST_CASE("gram_linear on orthonormal and antipodal pairs") {
    KernelMatrix ortho = gram_linear(points_only({{1, 0}, {0, 1}}));
    CHECK(ortho.at(0, 0) == 1.0);
    CHECK(ortho.at(0, 1) == 0.0);
    CHECK(ortho.at(1, 1) == 1.0);
    CHECK_FALSE(ortho.centered);

    KernelMatrix anti = gram_linear(points_only({{1, 0}, {-1, 0}}));
    CHECK(anti.at(0, 0) == 1.0);
    CHECK(anti.at(0, 1) == -1.0);
    CHECK(anti.at(1, 0) == -1.0);
    CHECK(anti.at(1, 1) == 1.0);
}

TEST_CASE("gram_linear equals the explicit matrix product") {
    SplitMix64Stream rng(7);
    std::vector<std::array<double, 2>> pts(5);
    for (auto& p : pts) p = {rng.next_uniform(-2, 2), rng.next_uniform(-2, 2)};
    DataSet ds = points_only(pts);
    KernelMatrix km = gram_linear(ds);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 2; ++k) dot += pts[i][k] * pts[j][k];
            CHECK(km.at(i, j) == doctest::Approx(dot).epsilon(1e-12));
        }
    }
}

TEST_CASE("kernel_circles matches the explicit feature map") {
    CHECK(kernel_circles({0, 0}, {0, 0}, 2.0) == 0.0);
    CHECK(kernel_circles({1, 0}, {0, 1}, 1.0) == doctest::Approx(1.0));

    SplitMix64Stream rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<double, 2> x = {rng.next_uniform(-2, 2), rng.next_uniform(-2, 2)};
        std::array<double, 2> y = {rng.next_uniform(-2, 2), rng.next_uniform(-2, 2)};
        double a = rng.next_uniform(0.1, 3.0);
        double nx = x[0] * x[0] + x[1] * x[1];
        double ny = y[0] * y[0] + y[1] * y[1];
        double phi_x[3] = {x[0], x[1], a * nx};
        double phi_y[3] = {y[0], y[1], a * ny};
        double expected = phi_x[0] * phi_y[0] + phi_x[1] * phi_y[1] + phi_x[2] * phi_y[2];
        CHECK(kernel_circles(x, y, a) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("gram_circles diagonal and PSD") {
    DataSet ds = gen_circles({10, 0.6, 0.05, 1.0, 21});
    double a = 1.3;
    KernelMatrix km = gram_circles(ds, a);
    for (int i = 0; i < km.n; ++i) {
        double nx = ds.points[i][0] * ds.points[i][0] + ds.points[i][1] * ds.points[i][1];
        CHECK(km.at(i, i) == doctest::Approx(nx + a * a * nx * nx).epsilon(1e-12));
        for (int j = 0; j < km.n; ++j) {
            CHECK(km.at(i, j) == doctest::Approx(kernel_circles(ds.points[i], ds.points[j], a)));
        }
    }
    CHECK(min_eigenvalue(km) >= -1e-9);
}

TEST_CASE("linear Gram matrices are PSD") {
    DataSet ds = gen_cones({9, 0.4, 0.5, 0.3, 77});
    CHECK(min_eigenvalue(gram_linear(ds)) >= -1e-9);
}

TEST_CASE("center_kernel annihilates the constant kernel") {
    KernelMatrix km;
    km.n = 4;
    km.values.assign(16, 1.0);
    KernelMatrix c = center_kernel(km);
    CHECK(c.centered);
    for (double v : c.values) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("center_kernel fixes row sums to zero and is idempotent") {
    SplitMix64Stream rng(29);
    KernelMatrix km;
    km.n = 4;
    km.values.assign(16, 0.0);
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            double v = rng.next_uniform(-3, 3);
            km.values[i * 4 + j] = v;
            km.values[j * 4 + i] = v;
        }
    }
    KernelMatrix c = center_kernel(km);
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += c.at(i, j);
        CHECK(std::abs(row) < 1e-9);
    }
    KernelMatrix cc = center_kernel(c);
    for (int i = 0; i < 16; ++i) {
        CHECK(cc.values[i] == doctest::Approx(c.values[i]).epsilon(1e-9));
    }
}

TEST_CASE("gram of centered data is already centered") {
    DataSet ds = gen_cones({12, 0.5, 0.3, 0.4, 55});  // generator mean-centers
    KernelMatrix km = gram_linear(ds);
    KernelMatrix c = center_kernel(km);
    for (int i = 0; i < km.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < km.n; ++j) row += km.at(i, j);
        CHECK(std::abs(row) < 1e-9);
        for (int j = 0; j < km.n; ++j) {
            CHECK(c.at(i, j) == doctest::Approx(km.at(i, j)).epsilon(1e-9));
        }
    }
}
