// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qgl/qubo.hpp"

namespace qgl {

// Interpolation schedule for H(s) = f(s) * H_I + g(s) * H_P on s in [0,1],
// with f(0) = g(1) = 1, f(1) = g(0) = 0, f decreasing, g increasing
// (validated on an evaluation grid).
struct AnnealSchedule {
    std::function<double(double)> f;
    std::function<double(double)> g;
    std::string name;

    static AnnealSchedule linear();  // f(s) = 1 - s, g(s) = s

    /// Boundary values, range and monotonicity on a uniform grid.
    void validate(int grid_points = 101) const;
};

// Real symmetric matrix in a flat dim*dim buffer. Hamiltonian factories
// produce dim = 2^n (n <= 12); the container itself accepts any dim in
// [1, 4096] so the eigensolver is usable on kernel matrices and on the
// arbitrary-dimension pairs fed to weyl_check.
struct DenseHamiltonian {
    std::size_t dim = 0;
    std::vector<double> entries;

    double at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    double& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
};

/// Zero-initialized dim x dim matrix; 1 <= dim <= 4096.
DenseHamiltonian make_hamiltonian(std::size_t dim);

/// Diagonal 2^n x 2^n matrix whose entry at state word b is the QUBO energy
/// of b (bit i = variable i). Requires n <= 12.
DenseHamiltonian problem_hamiltonian(const QuboInstance& q);

/// Standard transverse field -sum_i sigma_x^(i): entry -1 wherever the two
/// state words differ in exactly one bit. Eigenvalues {-n, -n+2, ..., n};
/// spectral gap 2. Requires 1 <= n <= 12.
DenseHamiltonian transverse_field(int n);

// All eigenvalues in ascending order (with multiplicity), by cyclic Jacobi
// iteration: sweeps rotate away every off-diagonal pair until the
// off-diagonal Frobenius norm drops below 1e-12 * ||M||_F, capped at 100
// sweeps (failure to converge reports the achieved residual).
std::vector<double> eigenvalues_symmetric(const DenseHamiltonian& m);

/// lambda_2(s) - lambda_1(s) of H(s), raw sorted-with-multiplicity convention
/// (zero when H(s) has a degenerate ground level). Requires n <= 12.
double gap_at(const QuboInstance& q, const AnnealSchedule& sched, double s);

struct MinGapResult {
    double s_star = 0.0;
    double gap = 0.0;
};

// Minimum of gap_at over s: evaluated on a uniform grid of grid_points
// values (default 201), then refined around the grid minimum by
// golden-section search to s-resolution 1e-6. Returns the best evaluated
// point, so the result never exceeds any grid value.
MinGapResult min_gap_schedule(const QuboInstance& q, const AnnealSchedule& sched,
                              int grid_points = 201, int threads = 0);

// Weyl two-sided eigenvalue bounds for M = N + R:
// nu_i + rho_min <= mu_i <= nu_i + rho_max for every i, plus the derived
// gap bound SG(M) <= SG(N) + (rho_max - rho_min).
struct WeylReport {
    std::size_t dim = 0;
    double max_violation = 0.0;  // signed; positive means a bound is breached
    bool ok = false;             // max_violation <= 1e-8
    double sg_sum = 0.0;         // mu_2 - mu_1
    double sg_first = 0.0;       // nu_2 - nu_1
    double spectral_range = 0.0; // rho_max - rho_min
    bool sum_bound_ok = false;   // sg_sum <= sg_first + spectral_range + 1e-8
};

/// Requires equal dims >= 2 and symmetric inputs.
WeylReport weyl_check(const DenseHamiltonian& nu, const DenseHamiltonian& rho);

// Upper bound on the minimal schedule gap: for f = 1 - g, the minimal gap
// of H(s) never exceeds min{SG(H_P), SG(H_I)} (raw convention).
struct GapBoundReport {
    double s_star = 0.0;
    double min_gap = 0.0;
    double gap_problem = 0.0;  // raw gap of H_P (0 for degenerate ground states)
    double gap_initial = 2.0;  // gap of the transverse field
    bool ok = false;           // min_gap <= min(gap_problem, gap_initial) + 1e-8
};

/// Requires n <= 8 and a schedule with f = 1 - g (checked on a grid).
GapBoundReport gap_bound_check(const QuboInstance& q, const AnnealSchedule& sched,
                               int grid_points = 201);

}  // namespace qgl
