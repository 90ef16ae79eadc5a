// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/embeddings.hpp"

#include <cmath>
#include <iostream>

namespace qgl {

QuboInstance clustering_qubo(const KernelMatrix& km) {
    int n = km.n;
    if (n < 2) throw contract_error("clustering_qubo: need at least 2 points");
    if (!km.centered) {
        std::cerr << "warning: clustering_qubo called with an uncentered kernel matrix\n";
    }
    // ones^T K z - z^T K z  ==  z^T (-K) z + colsums^T z
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    std::vector<double> colsum(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[static_cast<std::size_t>(i) * n + j] = -km.at(i, j);
            colsum[j] += km.at(i, j);
        }
    }
    return from_symmetric(n, m, colsum);
}

QuboInstance svm_qubo(const KernelMatrix& km, const std::vector<int>& labels,
                      const SvmHyperparams& hp) {
    int n = km.n;
    if (n < 1) throw contract_error("svm_qubo: empty kernel matrix");
    if (static_cast<int>(labels.size()) != n) {
        throw contract_error("svm_qubo: label count does not match kernel size");
    }
    for (int y : labels) {
        if (y != -1 && y != 1) throw contract_error("svm_qubo: labels must be -1 or +1");
    }
    if (!(hp.c > 0.0)) throw contract_error("svm_qubo: C must be positive");
    if (!(hp.lambda >= 0.0)) throw contract_error("svm_qubo: lambda must be >= 0");

    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double yy = static_cast<double>(labels[i]) * labels[j];
            m[static_cast<std::size_t>(i) * n + j] = hp.c * yy * (0.5 * km.at(i, j) + hp.lambda);
        }
    }
    std::vector<double> linear(n, -1.0);
    return from_symmetric(n, m, linear);
}

}  // namespace qgl
