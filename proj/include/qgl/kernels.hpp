// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "qgl/common.hpp"
#include "qgl/datagen.hpp"

namespace qgl {

/// Symmetric Gram/kernel matrix. When `centered` is set, every row and
/// column sum is zero (within 1e-9 absolute).
struct KernelMatrix {
    int n = 0;
    std::vector<double> values;  // flat n*n, symmetric
    bool centered = false;

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * n + j]; }
};

/// Linear Gram matrix K_ij = <x_i, x_j>.
KernelMatrix gram_linear(const DataSet& data);

/// Kernel of the feature map (x1, x2, a*|x|^2): <x,y> + a^2 * |x|^2 * |y|^2.
double kernel_circles(const std::array<double, 2>& x, const std::array<double, 2>& y, double a);

/// Gram matrix of kernel_circles over the data set.
KernelMatrix gram_circles(const DataSet& data, double a);

/// Double centering H K H with H = I - (1/n) * ones; equivalent to
/// mean-centering the feature map. Idempotent.
KernelMatrix center_kernel(const KernelMatrix& km);

}  // namespace qgl
