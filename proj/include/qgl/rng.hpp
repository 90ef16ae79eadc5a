// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace qgl {

// Counter-based deterministic random stream. The k-th raw output is the
// splitmix64 finalizer applied to seed + (k+1) * 0x9E3779B97F4A7C15, so a
// stream is a pure function of (seed, draw index): no hidden state beyond
// the draw counter, and dropping a stream never perturbs any other stream.
class SplitMix64Stream {
public:
    explicit SplitMix64Stream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1), top 53 bits of one raw draw.
    double next_unit();

    /// Uniform double in [lo, hi]; lo == hi yields exactly lo.
    double next_uniform(double lo, double hi);

    /// Standard normal variate via the Marsaglia polar method. Each call
    /// runs its own rejection loop and discards the paired variate, so the
    /// value depends only on the stream position at entry.
    double next_gaussian();

    std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// splitmix64 finalizer (public so derived-seed schemes are reproducible
/// from the documented formula alone).
std::uint64_t splitmix64_finalize(std::uint64_t x);

/// Derived-stream seed for sample `index` of a sweep keyed by `master`.
/// mix(m, i) = finalize(m ^ finalize(i ^ 0xA0761D6478BD642F)); the double
/// finalize decorrelates the derived-seed family from in-stream counters.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace qgl
