// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgl/common.hpp"

namespace qgl {

/// Labeled 2-D point set. Rows of `points` are data points; labels are -1/+1.
struct DataSet {
    std::vector<std::array<double, 2>> points;
    std::vector<int> labels;
    std::string generator;                               // "cones", "circles", or "file"
    std::vector<std::pair<std::string, double>> params;  // parameter tuple used

    int size() const { return static_cast<int>(points.size()); }
};

struct ConesParams {
    int n = 0;          // >= 2
    double rho = 0.5;   // cluster size ratio, in (0, 1)
    double w = 0.2;     // spread, > 0
    double d = 0.0;     // separating margin, >= 0
    std::uint64_t seed = 0;
};

struct CirclesParams {
    int n = 0;          // even, >= 4
    double r = 0.5;     // inner radius, in (0, 1); outer radius fixed to 1
    double sigma = 0.0; // Gaussian noise std deviation, >= 0
    double a = 1.0;     // feature-map coefficient, > 0 (used by the kernel, carried here)
    std::uint64_t seed = 0;
};

/// Inverse-CDF transform of the symmetric triangular distribution on
/// [0, 2w] with mode w: 2w*sqrt(u/2) for u <= 1/2, else 2w*(1 - sqrt((1-u)/2)).
double sample_triangular(double u, double w);

// Two clusters of triangular-distributed points separated by a margin of at
// least d along the first axis, then rotated by a uniform angle and
// column-mean centered. The first clamp(floor(rho*n), 1, n-1) points carry
// label -1, the rest +1. Every cross-label pair is at distance >= d.
DataSet gen_cones(const ConesParams& p);

// n/2 points on the unit circle (label -1) and n/2 points on the circle of
// radius r (label +1), both at equally spaced angles 2*pi*k/(n/2), with
// i.i.d. N(0, sigma^2) noise added to every coordinate. Not mean-centered.
DataSet gen_circles(const CirclesParams& p);

/// Smallest Euclidean distance over pairs with different labels.
double min_cross_distance(const DataSet& ds);

// CSV format: header `x1,x2,label`, one row per point, 17 significant digits.
void write_dataset_csv(const DataSet& ds, const std::string& path);
DataSet read_dataset_csv(const std::string& path);

}  // namespace qgl
