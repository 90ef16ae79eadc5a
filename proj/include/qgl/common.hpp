// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace qgl {

/// Violated precondition or invalid argument. CLI maps this to exit code 1.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// File / stream failure (missing file, malformed row). CLI maps this to exit code 2.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Worker count resolution: `requested` if > 0, else the QGL_THREADS
/// environment variable, else std::thread::hardware_concurrency (min 1).
int resolve_threads(int requested = 0);

/// Runs fn(0..count-1) on up to `threads` workers (0 = resolve_threads()).
/// Indices are handed out via a shared counter; callers that need
/// deterministic output must write to per-index slots.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Shortest %.17g rendering; round-trips any finite double exactly.
std::string format_g17(double v);

}  // namespace qgl
