// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/annealing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace qgl {

namespace {

constexpr std::size_t kMaxDim = 4096;
constexpr int kMaxQubits = 12;

double frobenius(const DenseHamiltonian& m) {
    double s = 0.0;
    for (double v : m.entries) s += v * v;
    return std::sqrt(s);
}

double off_frobenius(const std::vector<double>& a, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            double v = a[i * dim + j];
            s += v * v;
        }
    }
    return std::sqrt(2.0 * s);
}

void check_symmetric(const DenseHamiltonian& m, const char* op) {
    double scale = 0.0;
    for (double v : m.entries) scale = std::max(scale, std::abs(v));
    double tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = i + 1; j < m.dim; ++j) {
            if (std::abs(m.at(i, j) - m.at(j, i)) > tol) {
                throw contract_error(std::string(op) + ": matrix is not symmetric");
            }
        }
    }
}

}  // namespace

AnnealSchedule AnnealSchedule::linear() {
    AnnealSchedule s;
    s.f = [](double x) { return 1.0 - x; };
    s.g = [](double x) { return x; };
    s.name = "linear";
    return s;
}

void AnnealSchedule::validate(int grid_points) const {
    if (!f || !g) throw contract_error("AnnealSchedule: f and g must be set");
    if (grid_points < 2) throw contract_error("AnnealSchedule: need at least 2 grid points");
    const double btol = 1e-9;
    if (std::abs(f(0.0) - 1.0) > btol || std::abs(g(1.0) - 1.0) > btol ||
        std::abs(f(1.0)) > btol || std::abs(g(0.0)) > btol) {
        throw contract_error("AnnealSchedule '" + name + "': boundary values must satisfy "
                             "f(0)=g(1)=1, f(1)=g(0)=0");
    }
    double prev_f = f(0.0), prev_g = g(0.0);
    for (int k = 1; k < grid_points; ++k) {
        double s = static_cast<double>(k) / (grid_points - 1);
        double fs = f(s), gs = g(s);
        if (fs < -btol || fs > 1.0 + btol || gs < -btol || gs > 1.0 + btol) {
            throw contract_error("AnnealSchedule '" + name + "': values must stay in [0,1]");
        }
        if (fs > prev_f + 1e-12 || gs < prev_g - 1e-12) {
            throw contract_error("AnnealSchedule '" + name + "': f must be decreasing and "
                                 "g increasing on the grid");
        }
        prev_f = fs;
        prev_g = gs;
    }
}

DenseHamiltonian make_hamiltonian(std::size_t dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw contract_error("DenseHamiltonian: dim must be in [1, " + std::to_string(kMaxDim) +
                             "]");
    }
    DenseHamiltonian h;
    h.dim = dim;
    h.entries.assign(dim * dim, 0.0);
    return h;
}

DenseHamiltonian problem_hamiltonian(const QuboInstance& q) {
    if (q.n() > kMaxQubits) {
        throw contract_error("problem_hamiltonian: n must be <= " + std::to_string(kMaxQubits));
    }
    std::size_t dim = std::size_t{1} << q.n();
    DenseHamiltonian h = make_hamiltonian(dim);
    for (std::size_t b = 0; b < dim; ++b) h.at(b, b) = energy(q, static_cast<std::uint64_t>(b));
    return h;
}

DenseHamiltonian transverse_field(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw contract_error("transverse_field: n must be in [1, " + std::to_string(kMaxQubits) +
                             "]");
    }
    std::size_t dim = std::size_t{1} << n;
    DenseHamiltonian h = make_hamiltonian(dim);
    for (std::size_t u = 0; u < dim; ++u) {
        for (int k = 0; k < n; ++k) {
            h.at(u, u ^ (std::size_t{1} << k)) = -1.0;
        }
    }
    return h;
}

std::vector<double> eigenvalues_symmetric(const DenseHamiltonian& m) {
    if (m.dim < 1 || m.entries.size() != m.dim * m.dim) {
        throw contract_error("eigenvalues_symmetric: malformed matrix");
    }
    check_symmetric(m, "eigenvalues_symmetric");

    const std::size_t dim = m.dim;
    std::vector<double> a = m.entries;
    const double norm = frobenius(m);
    if (norm == 0.0 || dim == 1) {
        std::vector<double> ev(dim);
        for (std::size_t i = 0; i < dim; ++i) ev[i] = a[i * dim + i];
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double conv = 1e-12 * norm;
    // Rotating away elements below `skip` cannot matter: even if every pair
    // sat at the threshold, the off-diagonal norm would stay under conv.
    const double skip = conv / (10.0 * static_cast<double>(dim));

    bool converged = false;
    double off = off_frobenius(a, dim);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off < conv) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                double apq = a[p * dim + q];
                if (std::abs(apq) <= skip) continue;
                double app = a[p * dim + p];
                double aqq = a[q * dim + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                a[p * dim + p] = app - t * apq;
                a[q * dim + q] = aqq + t * apq;
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k * dim + p];
                    double akq = a[k * dim + q];
                    double np = c * akp - s * akq;
                    double nq = s * akp + c * akq;
                    a[k * dim + p] = np;
                    a[p * dim + k] = np;
                    a[k * dim + q] = nq;
                    a[q * dim + k] = nq;
                }
            }
        }
        off = off_frobenius(a, dim);
    }
    if (!converged && off >= conv) {
        throw std::runtime_error("eigenvalues_symmetric: Jacobi failed to converge in 100 sweeps,"
                                 " residual " + format_g17(off) + " vs target " + format_g17(conv));
    }

    std::vector<double> ev(dim);
    for (std::size_t i = 0; i < dim; ++i) ev[i] = a[i * dim + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

namespace {

// Shared pieces for evaluating H(s) = fs * H_I + gs * H_P repeatedly.
struct ScheduleContext {
    int n = 0;
    std::size_t dim = 0;
    std::vector<double> hp_diag;

    explicit ScheduleContext(const QuboInstance& q) : n(q.n()) {
        if (n > kMaxQubits) {
            throw contract_error("annealing gap: n must be <= " + std::to_string(kMaxQubits));
        }
        dim = std::size_t{1} << n;
        hp_diag.resize(dim);
        for (std::size_t b = 0; b < dim; ++b) {
            hp_diag[b] = energy(q, static_cast<std::uint64_t>(b));
        }
    }

    double gap(double fs, double gs) const {
        DenseHamiltonian h = make_hamiltonian(dim);
        for (std::size_t u = 0; u < dim; ++u) {
            h.at(u, u) = gs * hp_diag[u];
            for (int k = 0; k < n; ++k) {
                h.at(u, u ^ (std::size_t{1} << k)) = -fs;
            }
        }
        auto ev = eigenvalues_symmetric(h);
        return ev.size() >= 2 ? ev[1] - ev[0] : 0.0;
    }
};

}  // namespace

double gap_at(const QuboInstance& q, const AnnealSchedule& sched, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw contract_error("gap_at: s must be in [0,1]");
    if (!sched.f || !sched.g) throw contract_error("gap_at: schedule must define f and g");
    ScheduleContext ctx(q);
    return ctx.gap(sched.f(s), sched.g(s));
}

MinGapResult min_gap_schedule(const QuboInstance& q, const AnnealSchedule& sched, int grid_points,
                              int threads) {
    if (grid_points < 2) throw contract_error("min_gap_schedule: need at least 2 grid points");
    sched.validate(grid_points);
    ScheduleContext ctx(q);

    // Cap workers so concurrent dim^2 work buffers stay within ~2 GB.
    std::size_t bytes = ctx.dim * ctx.dim * sizeof(double) * 2;
    std::size_t budget = std::size_t{2048} * 1024 * 1024;
    int mem_cap = static_cast<int>(std::max<std::size_t>(1, budget / bytes));
    int workers = std::min(resolve_threads(threads), mem_cap);

    std::vector<double> gaps(grid_points);
    parallel_for(grid_points, workers, [&](std::size_t k) {
        double s = static_cast<double>(k) / (grid_points - 1);
        gaps[k] = ctx.gap(sched.f(s), sched.g(s));
    });

    std::size_t kmin = 0;
    for (std::size_t k = 1; k < gaps.size(); ++k) {
        if (gaps[k] < gaps[kmin]) kmin = k;
    }
    double step = 1.0 / (grid_points - 1);
    double best_s = kmin * step;
    double best_gap = gaps[kmin];

    auto eval = [&](double s) {
        double g = ctx.gap(sched.f(s), sched.g(s));
        if (g < best_gap) {
            best_gap = g;
            best_s = s;
        }
        return g;
    };

    // Golden-section refinement around the grid minimum.
    double a = std::max(0.0, best_s - step);
    double b = std::min(1.0, best_s + step);
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (b - a > 1e-6) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = eval(x2);
        }
    }
    return MinGapResult{best_s, best_gap};
}

WeylReport weyl_check(const DenseHamiltonian& nu, const DenseHamiltonian& rho) {
    if (nu.dim != rho.dim) throw contract_error("weyl_check: dimension mismatch");
    if (nu.dim < 2) throw contract_error("weyl_check: need dim >= 2");

    DenseHamiltonian sum = make_hamiltonian(nu.dim);
    for (std::size_t i = 0; i < sum.entries.size(); ++i) {
        sum.entries[i] = nu.entries[i] + rho.entries[i];
    }
    auto mu_ev = eigenvalues_symmetric(sum);
    auto nu_ev = eigenvalues_symmetric(nu);
    auto rho_ev = eigenvalues_symmetric(rho);

    WeylReport rep;
    rep.dim = nu.dim;
    double rho_min = rho_ev.front();
    double rho_max = rho_ev.back();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nu.dim; ++i) {
        worst = std::max(worst, (nu_ev[i] + rho_min) - mu_ev[i]);
        worst = std::max(worst, mu_ev[i] - (nu_ev[i] + rho_max));
    }
    rep.max_violation = worst;
    rep.ok = worst <= 1e-8;
    rep.sg_sum = mu_ev[1] - mu_ev[0];
    rep.sg_first = nu_ev[1] - nu_ev[0];
    rep.spectral_range = rho_max - rho_min;
    rep.sum_bound_ok = rep.sg_sum <= rep.sg_first + rep.spectral_range + 1e-8;
    return rep;
}

GapBoundReport gap_bound_check(const QuboInstance& q, const AnnealSchedule& sched,
                               int grid_points) {
    if (q.n() > 8) throw contract_error("gap_bound_check: n must be <= 8");
    sched.validate(grid_points);
    for (int k = 0; k < 101; ++k) {
        double s = k / 100.0;
        if (std::abs(sched.f(s) + sched.g(s) - 1.0) > 1e-9) {
            throw contract_error("gap_bound_check: schedule must satisfy f = 1 - g");
        }
    }

    GapBoundReport rep;
    auto mg = min_gap_schedule(q, sched, grid_points);
    rep.s_star = mg.s_star;
    rep.min_gap = mg.gap;

    // Raw (with multiplicity) gap of the diagonal problem Hamiltonian.
    std::size_t dim = std::size_t{1} << q.n();
    double lo1 = std::numeric_limits<double>::infinity();
    double lo2 = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < dim; ++b) {
        double e = energy(q, static_cast<std::uint64_t>(b));
        if (e < lo1) {
            lo2 = lo1;
            lo1 = e;
        } else if (e < lo2) {
            lo2 = e;
        }
    }
    rep.gap_problem = lo2 - lo1;
    rep.gap_initial = 2.0;
    rep.ok = rep.min_gap <= std::min(rep.gap_problem, rep.gap_initial) + 1e-8;
    return rep;
}

}  // namespace qgl
