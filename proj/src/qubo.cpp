// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/qubo.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qgl {

namespace {

void check_dim(int n) {
    if (n < 1) throw contract_error("QuboInstance: n must be >= 1, got " + std::to_string(n));
}

void check_binary(const QuboInstance& q, const std::vector<int>& z, const char* op) {
    if (static_cast<int>(z.size()) != q.n()) {
        throw contract_error(std::string(op) + ": vector length " + std::to_string(z.size()) +
                             " does not match n = " + std::to_string(q.n()));
    }
    for (int v : z) {
        if (v != 0 && v != 1) throw contract_error(std::string(op) + ": entries must be 0 or 1");
    }
}

}  // namespace

QuboInstance::QuboInstance(int n) : n_(n) {
    check_dim(n);
    q_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

QuboInstance::QuboInstance(int n, std::vector<double> upper) : n_(n), q_(std::move(upper)) {
    check_dim(n);
    if (q_.size() != static_cast<std::size_t>(n) * n) {
        throw contract_error("QuboInstance: buffer must hold n*n entries");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = at(i, j);
            if (!std::isfinite(v)) throw contract_error("QuboInstance: entries must be finite");
            if (j < i && v != 0.0) {
                throw contract_error("QuboInstance: strictly-lower entry (" + std::to_string(i) +
                                     "," + std::to_string(j) + ") must be zero");
            }
        }
    }
}

void QuboInstance::set(int i, int j, double v) {
    if (i < 0 || j < i || j >= n_) throw contract_error("QuboInstance::set: need 0 <= i <= j < n");
    if (!std::isfinite(v)) throw contract_error("QuboInstance::set: value must be finite");
    q_[static_cast<std::size_t>(i) * n_ + j] = v;
}

double QuboInstance::max_abs() const {
    double m = 0.0;
    for (double v : q_) m = std::max(m, std::abs(v));
    return m;
}

double energy(const QuboInstance& q, const std::vector<int>& z) {
    check_binary(q, z, "energy");
    double e = 0.0;
    for (int i = 0; i < q.n(); ++i) {
        if (!z[i]) continue;
        e += q.at(i, i);
        for (int j = i + 1; j < q.n(); ++j) {
            if (z[j]) e += q.at(i, j);
        }
    }
    return e;
}

double energy(const QuboInstance& q, std::uint64_t state) {
    double e = 0.0;
    for (int i = 0; i < q.n(); ++i) {
        if (!((state >> i) & 1u)) continue;
        e += q.at(i, i);
        for (int j = i + 1; j < q.n(); ++j) {
            if ((state >> j) & 1u) e += q.at(i, j);
        }
    }
    return e;
}

double flip_delta(const QuboInstance& q, const std::vector<int>& z, int i) {
    check_binary(q, z, "flip_delta");
    if (i < 0 || i >= q.n()) {
        throw contract_error("flip_delta: index " + std::to_string(i) + " out of range");
    }
    double acc = q.at(i, i);
    for (int j = 0; j < i; ++j) {
        if (z[j]) acc += q.at(j, i);
    }
    for (int j = i + 1; j < q.n(); ++j) {
        if (z[j]) acc += q.at(i, j);
    }
    return z[i] ? -acc : acc;
}

IsingInstance to_ising(const QuboInstance& q) {
    // z = (s+1)/2: z_i z_j = (s_i s_j + s_i + s_j + 1)/4 for i != j,
    // z_i = (s_i + 1)/2 on the diagonal.
    int n = q.n();
    IsingInstance out;
    out.n = n;
    out.couplings.assign(static_cast<std::size_t>(n) * n, 0.0);
    out.fields.assign(n, 0.0);
    out.offset = 0.0;
    for (int i = 0; i < n; ++i) {
        out.fields[i] += q.at(i, i) / 2.0;
        out.offset += q.at(i, i) / 2.0;
        for (int j = i + 1; j < n; ++j) {
            double v = q.at(i, j);
            out.couplings[static_cast<std::size_t>(i) * n + j] = v / 4.0;
            out.fields[i] += v / 4.0;
            out.fields[j] += v / 4.0;
            out.offset += v / 4.0;
        }
    }
    return out;
}

double ising_energy(const IsingInstance& m, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != m.n) {
        throw contract_error("ising_energy: vector length does not match n");
    }
    for (int v : s) {
        if (v != -1 && v != 1) throw contract_error("ising_energy: entries must be -1 or +1");
    }
    double e = m.offset;
    for (int i = 0; i < m.n; ++i) {
        e += m.fields[i] * s[i];
        for (int j = i + 1; j < m.n; ++j) {
            e += m.coupling(i, j) * s[i] * s[j];
        }
    }
    return e;
}

QuboInstance from_symmetric(int n, const std::vector<double>& m, const std::vector<double>& linear) {
    check_dim(n);
    if (m.size() != static_cast<std::size_t>(n) * n) {
        throw contract_error("from_symmetric: matrix must hold n*n entries");
    }
    if (linear.size() != static_cast<std::size_t>(n)) {
        throw contract_error("from_symmetric: linear term must have length n");
    }
    double scale = 0.0;
    for (double v : m) {
        if (!std::isfinite(v)) throw contract_error("from_symmetric: entries must be finite");
        scale = std::max(scale, std::abs(v));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double a = m[static_cast<std::size_t>(i) * n + j];
            double b = m[static_cast<std::size_t>(j) * n + i];
            if (std::abs(a - b) > 1e-12 * scale) {
                throw contract_error("from_symmetric: matrix is not symmetric at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    QuboInstance q(n);
    for (int i = 0; i < n; ++i) {
        q.set(i, i, m[static_cast<std::size_t>(i) * n + i] + linear[i]);
        for (int j = i + 1; j < n; ++j) {
            q.set(i, j, 2.0 * m[static_cast<std::size_t>(i) * n + j]);
        }
    }
    return q;
}

QuboInstance normalize_inf(const QuboInstance& q) {
    double m = q.max_abs();
    if (m == 0.0) throw contract_error("degenerate instance, cannot normalize");
    QuboInstance out(q.n());
    for (int i = 0; i < q.n(); ++i) {
        for (int j = i; j < q.n(); ++j) {
            out.set(i, j, q.at(i, j) / m);
        }
    }
    return out;
}

void write_qubo(const QuboInstance& q, std::ostream& os) {
    os << q.n() << "\n";
    for (int i = 0; i < q.n(); ++i) {
        for (int j = i; j < q.n(); ++j) {
            double v = q.at(i, j);
            if (v != 0.0) os << i << " " << j << " " << format_g17(v) << "\n";
        }
    }
}

void write_qubo_file(const QuboInstance& q, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    write_qubo(q, os);
    if (!os) throw io_error("write failed for '" + path + "'");
}

QuboInstance read_qubo(std::istream& is) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<double> buf;
    std::vector<bool> seen;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n) || n < 1) {
                throw io_error("qubo line " + std::to_string(lineno) + ": expected variable count");
            }
            buf.assign(static_cast<std::size_t>(n) * n, 0.0);
            seen.assign(buf.size(), false);
            continue;
        }
        long long i, j;
        double v;
        if (!(ss >> i >> j >> v)) {
            throw io_error("qubo line " + std::to_string(lineno) + ": expected 'i j value'");
        }
        if (i < 0 || j < i || j >= n) {
            throw io_error("qubo line " + std::to_string(lineno) + ": need 0 <= i <= j < n");
        }
        if (!std::isfinite(v)) {
            throw io_error("qubo line " + std::to_string(lineno) + ": value must be finite");
        }
        std::size_t idx = static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
        if (seen[idx]) {
            throw io_error("qubo line " + std::to_string(lineno) + ": duplicate entry");
        }
        seen[idx] = true;
        buf[idx] = v;
    }
    if (n < 0) throw io_error("qubo input is empty");
    return QuboInstance(n, std::move(buf));
}

QuboInstance read_qubo_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open '" + path + "'");
    return read_qubo(is);
}

}  // namespace qgl
