// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/rng.hpp"

#include <cmath>

namespace qgl {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64_finalize(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t SplitMix64Stream::next_u64() {
    ++counter_;
    return splitmix64_finalize(seed_ + counter_ * kGolden);
}

double SplitMix64Stream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64Stream::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

double SplitMix64Stream::next_gaussian() {
    for (;;) {
        double u = 2.0 * next_unit() - 1.0;
        double v = 2.0 * next_unit() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_finalize(master ^ splitmix64_finalize(index ^ 0xA0761D6478BD642FULL));
}

}  // namespace qgl
