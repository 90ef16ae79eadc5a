// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/spectrum.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <vector>

namespace qgl {

namespace {

constexpr double kDegenTol = 1e-12;
constexpr int kMaxVars = 32;
constexpr int kGuardVars = 28;
constexpr int kBlockBits = 12;

// Dense symmetric coupling view: row(i)[j] holds the coupling between
// variables i and j (Q_min,max), diag(i) = Q_ii. Contiguous rows keep the
// flip-delta inner loop cache friendly.
struct CouplingView {
    int n;
    std::vector<double> sym;
    std::vector<double> diag;

    explicit CouplingView(const QuboInstance& q) : n(q.n()) {
        sym.assign(static_cast<std::size_t>(n) * n, 0.0);
        diag.resize(n);
        for (int i = 0; i < n; ++i) {
            diag[i] = q.at(i, i);
            for (int j = i + 1; j < n; ++j) {
                double v = q.at(i, j);
                sym[static_cast<std::size_t>(i) * n + j] = v;
                sym[static_cast<std::size_t>(j) * n + i] = v;
            }
        }
    }

    double delta(std::uint64_t state, int i) const {
        const double* row = sym.data() + static_cast<std::size_t>(i) * n;
        double acc = diag[i];
        for (int j = 0; j < n; ++j) {
            if ((state >> j) & 1u) acc += row[j];
        }
        return ((state >> i) & 1u) ? -acc : acc;
    }

    double direct(std::uint64_t state) const {
        double e = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!((state >> i) & 1u)) continue;
            e += diag[i];
            const double* row = sym.data() + static_cast<std::size_t>(i) * n;
            for (int j = i + 1; j < n; ++j) {
                if ((state >> j) & 1u) e += row[j];
            }
        }
        return e;
    }
};

// One Gray-code sweep over block `b` (states b*2^m .. (b+1)*2^m - 1),
// feeding (state word, energy) to the visitor. The accumulation is
// identical in every pass, so each state's energy is reproducible.
template <typename Visit>
void sweep_block(const CouplingView& cv, int block_bits, std::uint64_t b, Visit&& visit) {
    const std::uint64_t base = b << block_bits;
    const std::uint64_t count = std::uint64_t{1} << block_bits;
    long double acc = cv.direct(base);
    std::uint64_t state = base;
    visit(state, static_cast<double>(acc));
    for (std::uint64_t x = 1; x < count; ++x) {
        int bit = std::countr_zero(x);
        acc += cv.delta(state, bit);
        state ^= std::uint64_t{1} << bit;
        visit(state, static_cast<double>(acc));
    }
}

struct BlockBand {
    std::uint64_t count = 0;
    double second = std::numeric_limits<double>::infinity();
    std::uint64_t min_word = std::numeric_limits<std::uint64_t>::max();
};

}  // namespace

SpectrumSummary enumerate_spectrum(const QuboInstance& q, const EnumerateOptions& opts) {
    const int n = q.n();
    if (n > kMaxVars) {
        throw contract_error("enumerate_spectrum: n = " + std::to_string(n) +
                             " exceeds the hard limit of 32");
    }
    if (n > kGuardVars && !opts.allow_large) {
        throw contract_error("enumerate_spectrum: n = " + std::to_string(n) +
                             " exceeds the guard (" + std::to_string(kGuardVars) +
                             "); set allow_large to override");
    }

    const CouplingView cv(q);
    const int block_bits = std::min(n, kBlockBits);
    const std::uint64_t blocks = std::uint64_t{1} << (n - block_bits);

    // Pass 1: exact global minimum.
    std::vector<double> block_min(blocks, std::numeric_limits<double>::infinity());
    parallel_for(blocks, opts.threads, [&](std::size_t b) {
        double m = std::numeric_limits<double>::infinity();
        sweep_block(cv, block_bits, b, [&](std::uint64_t, double e) {
            if (e < m) m = e;
        });
        block_min[b] = m;
    });
    double gmin = block_min[0];
    for (std::uint64_t b = 1; b < blocks; ++b) gmin = std::min(gmin, block_min[b]);

    // Pass 2: ground band census relative to the global minimum.
    const double band = gmin + kDegenTol;
    std::vector<BlockBand> parts(blocks);
    parallel_for(blocks, opts.threads, [&](std::size_t b) {
        BlockBand part;
        sweep_block(cv, block_bits, b, [&](std::uint64_t word, double e) {
            if (e <= band) {
                ++part.count;
                if (word < part.min_word) part.min_word = word;
            } else if (e < part.second) {
                part.second = e;
            }
        });
        parts[b] = part;
    });

    std::uint64_t degeneracy = 0;
    double second = std::numeric_limits<double>::infinity();
    std::uint64_t best_word = std::numeric_limits<std::uint64_t>::max();
    for (const auto& part : parts) {
        degeneracy += part.count;
        second = std::min(second, part.second);
        best_word = std::min(best_word, part.min_word);
    }

    SpectrumSummary out;
    out.min_energy = gmin;
    out.ground_degeneracy = degeneracy;
    out.ground_state.resize(n);
    for (int i = 0; i < n; ++i) out.ground_state[i] = static_cast<int>((best_word >> i) & 1u);
    if (std::isfinite(second)) {
        out.second_energy = second;
        out.gap = second - gmin;
    }
    return out;
}

std::optional<double> spectral_gap(const QuboInstance& q, const EnumerateOptions& opts) {
    return enumerate_spectrum(q, opts).gap;
}

}  // namespace qgl
