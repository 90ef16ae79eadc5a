// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qgl/kernels.hpp"
#include "qgl/qubo.hpp"

namespace qgl {

struct SvmHyperparams {
    double c = 1.0;       // box constraint, > 0
    double lambda = 0.0;  // constraint penalty weight, >= 0
};

// QUBO for kernel 2-means clustering: minimizing the energy
// ones^T K z - z^T K z splits the points into the two clusters with the
// smallest summed cross-cluster similarity. Q_jj = colsum_j(K) - K_jj,
// Q_ij = -2 K_ij for i < j. Expects a centered kernel; warns on stderr
// (but proceeds) when it is not.
QuboInstance clustering_qubo(const KernelMatrix& km);

// QUBO for the binarized soft-margin SVM dual with alpha_i = C z_i and a
// squared penalty on the balance constraint:
// -ones^T z + C z^T (0.5*(Y.K) + lambda*Y) z, with Y_ij = y_i y_j.
// Q_ii = -1 + C*(K_ii/2 + lambda), Q_ij = C y_i y_j (K_ij + 2 lambda).
QuboInstance svm_qubo(const KernelMatrix& km, const std::vector<int>& labels,
                      const SvmHyperparams& hp);

}  // namespace qgl
