// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgl/common.hpp"

namespace qgl {

enum class ProblemKind { clustering, svm };
enum class GeneratorKind { cones, circles };

std::string to_string(ProblemKind p);
std::string to_string(GeneratorKind g);
ProblemKind problem_from_string(const std::string& s);
GeneratorKind generator_from_string(const std::string& s);

// One experiment: draw `samples` data sets with per-sample derived seeds,
// sweep one parameter (optionally two) uniformly over an interval, embed
// each sample into QUBO and record its spectral gap.
//
// Parameter names: rho, w, D (cones), r, sigma, a (circles), C, lambda
// (svm). The swept name must be valid for the chosen generator/problem and
// must not also appear in `fixed`.
struct SweepConfig {
    ProblemKind problem = ProblemKind::clustering;
    GeneratorKind generator = GeneratorKind::cones;
    int n = 8;
    std::map<std::string, double> fixed;
    std::string swept_name;
    double lo = 0.0;
    double hi = 1.0;
    std::optional<std::string> swept2_name;  // second swept parameter (2-D sweeps)
    double lo2 = 0.0;
    double hi2 = 0.0;
    int samples = 1;
    std::uint64_t master_seed = 0;
    bool normalize = true;
};

struct SweepRecord {
    std::uint64_t sample_index = 0;
    std::uint64_t seed = 0;  // derived per-sample seed
    ProblemKind problem = ProblemKind::clustering;
    GeneratorKind generator = GeneratorKind::cones;
    int n = 0;
    std::optional<double> rho, w, d, r, sigma, a, c, lambda;
    std::string swept_name;
    double swept_value = 0.0;
    std::optional<double> sg;
    double min_energy = 0.0;
    std::uint64_t ground_degeneracy = 0;
};

struct CorrelationReport {
    double pearson = 0.0;
    double spearman = 0.0;
    std::vector<double> quad_fit;  // c0, c1, c2 (ascending powers)
    std::vector<double> lin_fit;   // c0, c1
    double r2_quad = 0.0;
    double r2_lin = 0.0;
    int count = 0;          // records with sg present
    int count_excluded = 0; // records with sg absent
};

// Runs the sweep; sample k uses derived seed mix_seed(master_seed, k), from
// which the swept value(s) and the data seed are drawn, so samples are
// independent and the output is byte-stable for any worker count. Records
// come back ordered by sample_index.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, int threads = 0);

/// Pearson correlation coefficient; errors on constant input.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

struct PolyFit {
    std::vector<double> coeffs;  // ascending powers, degree+1 entries
    double r2 = 0.0;
};

/// Ordinary least squares of degree 1 or 2 (x mean-centered for
/// conditioning). Exactly constant ys give a flat fit with r2 = 0.
PolyFit fit_poly(const std::vector<double>& xs, const std::vector<double>& ys, int degree);

/// Correlations and fits of sg against the swept value, excluding records
/// with absent sg.
CorrelationReport summarize(const std::vector<SweepRecord>& records);

// CSV columns (exact order):
// sample_index,seed,problem,generator,n,rho,w,D,r,sigma,a,C,lambda,
// swept_name,swept_value,sg,min_energy,ground_degeneracy
// Absent values are written as empty fields; floats use 17 significant
// digits so the round-trip is lossless.
void write_csv(const std::vector<SweepRecord>& records, const std::string& path);
std::vector<SweepRecord> read_csv(const std::string& path);

void write_summary(const CorrelationReport& rep, const std::string& path);

}  // namespace qgl
