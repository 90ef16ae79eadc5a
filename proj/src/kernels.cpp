// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/kernels.hpp"

#include <cmath>

namespace qgl {

KernelMatrix gram_linear(const DataSet& data) {
    int n = data.size();
    if (n < 1) throw contract_error("gram_linear: empty data set");
    KernelMatrix km;
    km.n = n;
    km.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double v = data.points[i][0] * data.points[j][0] + data.points[i][1] * data.points[j][1];
            km.values[static_cast<std::size_t>(i) * n + j] = v;
            km.values[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return km;
}

double kernel_circles(const std::array<double, 2>& x, const std::array<double, 2>& y, double a) {
    if (!(a > 0.0)) throw contract_error("kernel_circles: a must be positive");
    double dot = x[0] * y[0] + x[1] * y[1];
    double nx = x[0] * x[0] + x[1] * x[1];
    double ny = y[0] * y[0] + y[1] * y[1];
    return dot + a * a * nx * ny;
}

KernelMatrix gram_circles(const DataSet& data, double a) {
    int n = data.size();
    if (n < 1) throw contract_error("gram_circles: empty data set");
    KernelMatrix km;
    km.n = n;
    km.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double v = kernel_circles(data.points[i], data.points[j], a);
            km.values[static_cast<std::size_t>(i) * n + j] = v;
            km.values[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return km;
}

KernelMatrix center_kernel(const KernelMatrix& km) {
    int n = km.n;
    if (n < 1) throw contract_error("center_kernel: empty matrix");
    std::vector<double> row_mean(n, 0.0);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += km.at(i, j);
        row_mean[i] = s / n;
        total += s;
    }
    total /= static_cast<double>(n) * n;

    KernelMatrix out;
    out.n = n;
    out.centered = true;
    out.values.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double v = km.at(i, j) - row_mean[i] - row_mean[j] + total;
            out.values[static_cast<std::size_t>(i) * n + j] = v;
            out.values[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return out;
}

}  // namespace qgl
