// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/datagen.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "qgl/rng.hpp"

namespace qgl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double sample_triangular(double u, double w) {
    if (!(u >= 0.0 && u <= 1.0)) throw contract_error("sample_triangular: u must be in [0,1]");
    if (!(w > 0.0)) throw contract_error("sample_triangular: w must be positive");
    if (u <= 0.5) return 2.0 * w * std::sqrt(u / 2.0);
    return 2.0 * w * (1.0 - std::sqrt((1.0 - u) / 2.0));
}

DataSet gen_cones(const ConesParams& p) {
    if (p.n < 2) throw contract_error("gen_cones: n must be >= 2");
    if (!(p.rho > 0.0 && p.rho < 1.0)) throw contract_error("gen_cones: rho must be in (0,1)");
    if (!(p.w > 0.0)) throw contract_error("gen_cones: w must be positive");
    if (!(p.d >= 0.0) || !std::isfinite(p.d)) throw contract_error("gen_cones: d must be >= 0");

    int n1 = static_cast<int>(std::floor(p.rho * p.n));
    n1 = std::max(1, std::min(n1, p.n - 1));

    SplitMix64Stream rng(p.seed);
    DataSet ds;
    ds.points.resize(p.n);
    ds.labels.resize(p.n);
    for (int i = 0; i < p.n; ++i) {
        ds.points[i][0] = sample_triangular(rng.next_unit(), p.w);
        ds.points[i][1] = sample_triangular(rng.next_unit(), p.w);
    }
    // Both clusters live in [0,2w] x [0,2w]; shifting the second cluster by
    // 2w + d along the first axis makes every cross-pair distance >= d.
    for (int i = n1; i < p.n; ++i) {
        ds.points[i][0] += 2.0 * p.w + p.d;
    }

    double theta = kTwoPi * rng.next_unit();
    double c = std::cos(theta), s = std::sin(theta);
    for (auto& pt : ds.points) {
        // row-vector convention: x' = x * R(theta), R = [[c,-s],[s,c]]
        double x = pt[0], y = pt[1];
        pt[0] = x * c + y * s;
        pt[1] = -x * s + y * c;
    }

    double mu0 = 0.0, mu1 = 0.0;
    for (const auto& pt : ds.points) {
        mu0 += pt[0];
        mu1 += pt[1];
    }
    mu0 /= p.n;
    mu1 /= p.n;
    for (auto& pt : ds.points) {
        pt[0] -= mu0;
        pt[1] -= mu1;
    }

    for (int i = 0; i < p.n; ++i) ds.labels[i] = i < n1 ? -1 : +1;

    ds.generator = "cones";
    ds.params = {{"n", static_cast<double>(p.n)},
                 {"rho", p.rho},
                 {"w", p.w},
                 {"D", p.d},
                 {"seed", static_cast<double>(p.seed)}};
    return ds;
}

DataSet gen_circles(const CirclesParams& p) {
    if (p.n < 4 || p.n % 2 != 0) throw contract_error("gen_circles: n must be even and >= 4");
    if (!(p.r > 0.0 && p.r < 1.0)) throw contract_error("gen_circles: r must be in (0,1)");
    if (!(p.sigma >= 0.0) || !std::isfinite(p.sigma)) {
        throw contract_error("gen_circles: sigma must be >= 0");
    }
    if (!(p.a > 0.0)) throw contract_error("gen_circles: a must be positive");

    int m = p.n / 2;
    SplitMix64Stream rng(p.seed);
    DataSet ds;
    ds.points.resize(p.n);
    ds.labels.resize(p.n);
    for (int k = 0; k < m; ++k) {
        double ang = kTwoPi * k / m;
        ds.points[k] = {std::cos(ang), std::sin(ang)};
        ds.labels[k] = -1;
        ds.points[m + k] = {p.r * std::cos(ang), p.r * std::sin(ang)};
        ds.labels[m + k] = +1;
    }
    for (auto& pt : ds.points) {
        pt[0] += p.sigma * rng.next_gaussian();
        pt[1] += p.sigma * rng.next_gaussian();
    }

    ds.generator = "circles";
    ds.params = {{"n", static_cast<double>(p.n)},
                 {"r", p.r},
                 {"sigma", p.sigma},
                 {"a", p.a},
                 {"seed", static_cast<double>(p.seed)}};
    return ds;
}

double min_cross_distance(const DataSet& ds) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < ds.size(); ++i) {
        for (int j = i + 1; j < ds.size(); ++j) {
            if (ds.labels[i] == ds.labels[j]) continue;
            double dx = ds.points[i][0] - ds.points[j][0];
            double dy = ds.points[i][1] - ds.points[j][1];
            best = std::min(best, std::sqrt(dx * dx + dy * dy));
        }
    }
    return best;
}

void write_dataset_csv(const DataSet& ds, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    os << "x1,x2,label\n";
    for (int i = 0; i < ds.size(); ++i) {
        os << format_g17(ds.points[i][0]) << "," << format_g17(ds.points[i][1]) << ","
           << ds.labels[i] << "\n";
    }
    if (!os) throw io_error("write failed for '" + path + "'");
}

DataSet read_dataset_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(is, line)) throw io_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x1,x2,label") throw io_error(path + " line 1: expected header 'x1,x2,label'");

    DataSet ds;
    ds.generator = "file";
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string fx, fy, fl;
        if (!std::getline(ss, fx, ',') || !std::getline(ss, fy, ',') || !std::getline(ss, fl)) {
            throw io_error(path + " line " + std::to_string(lineno) + ": expected 3 fields");
        }
        try {
            double x = std::stod(fx);
            double y = std::stod(fy);
            int lab = std::stoi(fl);
            if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("nan");
            if (lab != -1 && lab != 1) {
                throw io_error(path + " line " + std::to_string(lineno) + ": label must be -1 or 1");
            }
            ds.points.push_back({x, y});
            ds.labels.push_back(lab);
        } catch (const io_error&) {
            throw;
        } catch (const std::exception&) {
            throw io_error(path + " line " + std::to_string(lineno) + ": malformed row");
        }
    }
    if (ds.points.empty()) throw io_error(path + ": no data rows");
    return ds;
}

}  // namespace qgl
