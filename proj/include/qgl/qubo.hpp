// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgl/common.hpp"

namespace qgl {

// Upper-triangular coefficient matrix of the quadratic energy
// E(z) = sum_{i<=j} Q_ij z_i z_j over z in {0,1}^n. Entries below the
// diagonal are identically zero; all entries are finite. Instances are
// immutable after construction and safe to share across threads.
//
// Bit convention used throughout: variable i is bit i of a packed state
// word (variable 0 = least significant bit), and state words ordered as
// integers define the lexicographic state order.
class QuboInstance {
public:
    /// Zero matrix of size n (n >= 1).
    explicit QuboInstance(int n);

    /// From a flat row-major n*n buffer; strictly-lower entries must be 0.
    QuboInstance(int n, std::vector<double> upper);

    int n() const { return n_; }
    double at(int i, int j) const { return q_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v);

    const std::vector<double>& raw() const { return q_; }

    /// max_{i<=j} |Q_ij|
    double max_abs() const;

private:
    int n_;
    std::vector<double> q_;
};

// Spin-variable form of the same energy: E(s) = sum_{i<j} J_ij s_i s_j
// + sum_i h_i s_i + c over s in {-1,+1}^n. J is strictly upper triangular.
struct IsingInstance {
    int n = 0;
    std::vector<double> couplings;  // flat n*n, strictly upper
    std::vector<double> fields;     // length n
    double offset = 0.0;

    double coupling(int i, int j) const { return couplings[static_cast<std::size_t>(i) * n + j]; }
};

// Exact spectrum statistics of a diagonal problem Hamiltonian. The gap is
// the distance between the two lowest *distinct* energy values; energies
// within 1e-12 (absolute) of the minimum count as degenerate ground states.
struct SpectrumSummary {
    double min_energy = 0.0;
    std::optional<double> second_energy;  // lowest value strictly above the ground band
    std::optional<double> gap;            // second_energy - min_energy
    std::uint64_t ground_degeneracy = 0;
    std::vector<int> ground_state;        // lexicographically smallest minimizer
};

/// E(z) for a 0/1 vector of length n.
double energy(const QuboInstance& q, const std::vector<int>& z);

/// E(z) for a packed state word (bit i = variable i).
double energy(const QuboInstance& q, std::uint64_t state);

/// E(z with bit i flipped) - E(z), in closed form:
/// (1 - 2 z_i) * (Q_ii + sum_{j<i} Q_ji z_j + sum_{j>i} Q_ij z_j).
double flip_delta(const QuboInstance& q, const std::vector<int>& z, int i);

/// Equivalent spin form under z = (s+1)/2. For every z and s = 2z - 1,
/// ising_energy(to_ising(q), s) == energy(q, z).
IsingInstance to_ising(const QuboInstance& q);

/// E(s) of the spin form; s entries must be -1 or +1.
double ising_energy(const IsingInstance& m, const std::vector<int>& s);

/// QUBO realizing z^T M z + linear^T z for symmetric M: Q_ii = M_ii +
/// linear_i, Q_ij = 2 M_ij (i < j). M must be symmetric within 1e-12
/// relative to its largest entry. Any constant offset produced by the
/// calling embedding is intentionally discarded; spectral gaps are
/// translation invariant.
QuboInstance from_symmetric(int n, const std::vector<double>& m, const std::vector<double>& linear);

/// Q / max_abs(Q), so the largest absolute entry becomes exactly 1.
/// Rejects the all-zero instance.
QuboInstance normalize_inf(const QuboInstance& q);

// Text format: first line `n`, then one `i j value` line per nonzero entry
// (0-based, i <= j, 17 significant digits); `#` starts a comment; omitted
// pairs are zero.
void write_qubo(const QuboInstance& q, std::ostream& os);
void write_qubo_file(const QuboInstance& q, const std::string& path);
QuboInstance read_qubo(std::istream& is);
QuboInstance read_qubo_file(const std::string& path);

}  // namespace qgl
