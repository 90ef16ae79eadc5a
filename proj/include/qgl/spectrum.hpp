// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "qgl/qubo.hpp"

namespace qgl {

struct EnumerateOptions {
    int threads = 0;          // 0 = resolve_threads()
    bool allow_large = false; // required for n in (28, 32]
};

// Exact spectrum statistics by exhaustive enumeration of all 2^n states.
// States are visited in reflected-Gray-code order within fixed blocks of at
// most 2^12 states (the high n-12 bits select the block); each block starts
// from a directly evaluated energy and advances by single-bit flip deltas
// accumulated in extended precision. Two full passes: the first finds the
// exact minimum, the second counts the ground band (within 1e-12 absolute),
// the lowest energy above it, and the lexicographically smallest minimizer.
// Output is bit-identical for any worker count.
SpectrumSummary enumerate_spectrum(const QuboInstance& q, const EnumerateOptions& opts = {});

/// Gap between the two lowest distinct energies; absent for constant spectra.
std::optional<double> spectral_gap(const QuboInstance& q, const EnumerateOptions& opts = {});

}  // namespace qgl
