// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qgl/qubo.hpp"
#include "qgl/rng.hpp"

namespace qgl::testing {

/// Dense random QUBO with entries uniform in [-1, 1].
inline QuboInstance random_qubo(int n, SplitMix64Stream& rng) {
    QuboInstance q(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            q.set(i, j, rng.next_uniform(-1.0, 1.0));
        }
    }
    return q;
}

inline std::vector<int> unpack_state(std::uint64_t word, int n) {
    std::vector<int> z(n);
    for (int i = 0; i < n; ++i) z[i] = static_cast<int>((word >> i) & 1u);
    return z;
}

// Independent spectrum oracle: evaluate every state from scratch via the
// public energy operation, sort, and apply the 1e-12 ground-band rule.
struct NaiveSpectrum {
    double min_energy;
    bool has_second;
    double second_energy;
    std::uint64_t degeneracy;
    std::uint64_t best_word;
};

inline NaiveSpectrum naive_spectrum(const QuboInstance& q) {
    const std::uint64_t count = std::uint64_t{1} << q.n();
    std::vector<double> energies(count);
    for (std::uint64_t w = 0; w < count; ++w) energies[w] = energy(q, w);

    NaiveSpectrum out{};
    out.min_energy = *std::min_element(energies.begin(), energies.end());
    out.degeneracy = 0;
    out.has_second = false;
    out.second_energy = 0.0;
    out.best_word = count;
    const double band = out.min_energy + 1e-12;
    for (std::uint64_t w = 0; w < count; ++w) {
        if (energies[w] <= band) {
            ++out.degeneracy;
            if (w < out.best_word) out.best_word = w;
        } else if (!out.has_second || energies[w] < out.second_energy) {
            out.has_second = true;
            out.second_energy = energies[w];
        }
    }
    return out;
}

}  // namespace qgl::testing
