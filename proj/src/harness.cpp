// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgl/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qgl/datagen.hpp"
#include "qgl/embeddings.hpp"
#include "qgl/kernels.hpp"
#include "qgl/rng.hpp"
#include "qgl/spectrum.hpp"

namespace qgl {

std::string to_string(ProblemKind p) {
    return p == ProblemKind::clustering ? "clustering" : "svm";
}

std::string to_string(GeneratorKind g) {
    return g == GeneratorKind::cones ? "cones" : "circles";
}

ProblemKind problem_from_string(const std::string& s) {
    if (s == "clustering") return ProblemKind::clustering;
    if (s == "svm") return ProblemKind::svm;
    throw contract_error("unknown problem '" + s + "' (expected clustering or svm)");
}

GeneratorKind generator_from_string(const std::string& s) {
    if (s == "cones") return GeneratorKind::cones;
    if (s == "circles") return GeneratorKind::circles;
    throw contract_error("unknown generator '" + s + "' (expected cones or circles)");
}

namespace {

const std::vector<std::string>& param_names_for(const SweepConfig& cfg) {
    static const std::vector<std::string> cones_clust = {"rho", "w", "D"};
    static const std::vector<std::string> cones_svm = {"rho", "w", "D", "C", "lambda"};
    static const std::vector<std::string> circ_clust = {"r", "sigma", "a"};
    static const std::vector<std::string> circ_svm = {"r", "sigma", "a", "C", "lambda"};
    if (cfg.generator == GeneratorKind::cones) {
        return cfg.problem == ProblemKind::clustering ? cones_clust : cones_svm;
    }
    return cfg.problem == ProblemKind::clustering ? circ_clust : circ_svm;
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.samples < 1) throw contract_error("sweep: samples must be >= 1");
    if (!(cfg.lo <= cfg.hi)) throw contract_error("sweep: interval must satisfy lo <= hi");
    if (cfg.n < 2) throw contract_error("sweep: n must be >= 2");
    if (cfg.n > 28) throw contract_error("sweep: n exceeds the enumeration guard (28)");

    const auto& names = param_names_for(cfg);
    auto known = [&](const std::string& name) {
        return std::find(names.begin(), names.end(), name) != names.end();
    };
    if (!known(cfg.swept_name)) {
        throw contract_error("sweep: parameter '" + cfg.swept_name + "' is not sweepable for " +
                             to_string(cfg.problem) + "/" + to_string(cfg.generator));
    }
    if (cfg.fixed.count(cfg.swept_name)) {
        throw contract_error("sweep: swept parameter '" + cfg.swept_name + "' also appears fixed");
    }
    if (cfg.swept2_name) {
        if (!known(*cfg.swept2_name)) {
            throw contract_error("sweep: parameter '" + *cfg.swept2_name + "' is not sweepable");
        }
        if (*cfg.swept2_name == cfg.swept_name) {
            throw contract_error("sweep: the two swept parameters must differ");
        }
        if (cfg.fixed.count(*cfg.swept2_name)) {
            throw contract_error("sweep: swept parameter '" + *cfg.swept2_name +
                                 "' also appears fixed");
        }
        if (!(cfg.lo2 <= cfg.hi2)) throw contract_error("sweep: interval must satisfy lo <= hi");
    }
    for (const auto& [key, value] : cfg.fixed) {
        if (!known(key)) {
            throw contract_error("sweep: fixed parameter '" + key + "' is not recognized for " +
                                 to_string(cfg.problem) + "/" + to_string(cfg.generator));
        }
        if (!std::isfinite(value)) throw contract_error("sweep: fixed parameter must be finite");
    }
}

double require_param(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw contract_error("sweep: missing parameter '" + key + "'");
    return it->second;
}

SweepRecord run_one(const SweepConfig& cfg, std::uint64_t k) {
    SweepRecord rec;
    rec.sample_index = k;
    rec.seed = mix_seed(cfg.master_seed, k);
    rec.problem = cfg.problem;
    rec.generator = cfg.generator;
    rec.n = cfg.n;
    rec.swept_name = cfg.swept_name;

    SplitMix64Stream rng(rec.seed);
    std::map<std::string, double> params = cfg.fixed;
    rec.swept_value = rng.next_uniform(cfg.lo, cfg.hi);
    params[cfg.swept_name] = rec.swept_value;
    if (cfg.swept2_name) {
        params[*cfg.swept2_name] = rng.next_uniform(cfg.lo2, cfg.hi2);
    }
    std::uint64_t data_seed = rng.next_u64();

    DataSet ds;
    KernelMatrix km;
    if (cfg.generator == GeneratorKind::cones) {
        ConesParams p;
        p.n = cfg.n;
        p.rho = require_param(params, "rho");
        p.w = require_param(params, "w");
        p.d = require_param(params, "D");
        p.seed = data_seed;
        ds = gen_cones(p);
        km = gram_linear(ds);
        rec.rho = p.rho;
        rec.w = p.w;
        rec.d = p.d;
    } else {
        CirclesParams p;
        p.n = cfg.n;
        p.r = require_param(params, "r");
        p.sigma = require_param(params, "sigma");
        p.a = params.count("a") ? params.at("a") : 1.0;
        p.seed = data_seed;
        ds = gen_circles(p);
        km = gram_circles(ds, p.a);
        rec.r = p.r;
        rec.sigma = p.sigma;
        rec.a = p.a;
    }

    QuboInstance q(cfg.n);
    if (cfg.problem == ProblemKind::clustering) {
        q = clustering_qubo(center_kernel(km));
    } else {
        SvmHyperparams hp;
        hp.c = require_param(params, "C");
        hp.lambda = require_param(params, "lambda");
        rec.c = hp.c;
        rec.lambda = hp.lambda;
        q = svm_qubo(km, ds.labels, hp);
    }
    if (cfg.normalize && q.max_abs() > 0.0) {
        q = normalize_inf(q);
    }

    EnumerateOptions eopts;
    eopts.threads = 1;  // samples already run in parallel
    SpectrumSummary sum = enumerate_spectrum(q, eopts);
    rec.sg = sum.gap;
    rec.min_energy = sum.min_energy;
    rec.ground_degeneracy = sum.ground_degeneracy;
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, int threads) {
    validate_config(cfg);
    std::vector<SweepRecord> records(cfg.samples);
    parallel_for(static_cast<std::size_t>(cfg.samples), threads,
                 [&](std::size_t k) { records[k] = run_one(cfg, k); });
    return records;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw contract_error("pearson: need two equal-length vectors of size >= 2");
    }
    std::size_t n = xs.size();
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = xs[i] - mx;
        double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw contract_error("undefined correlation");
    return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<double> ranks_with_ties(const std::vector<double>& xs) {
    std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw contract_error("spearman: need two equal-length vectors of size >= 2");
    }
    return pearson(ranks_with_ties(xs), ranks_with_ties(ys));
}

PolyFit fit_poly(const std::vector<double>& xs, const std::vector<double>& ys, int degree) {
    if (degree != 1 && degree != 2) throw contract_error("fit_poly: degree must be 1 or 2");
    if (xs.size() != ys.size() || static_cast<int>(xs.size()) < degree + 1) {
        throw contract_error("fit_poly: need at least degree + 1 points");
    }
    std::size_t n = xs.size();
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;

    PolyFit out;
    auto minmax = std::minmax_element(ys.begin(), ys.end());
    if (*minmax.first == *minmax.second) {
        // Exactly constant response: flat fit, r2 = 0 by convention.
        out.coeffs.assign(degree + 1, 0.0);
        out.coeffs[0] = my;
        out.r2 = 0.0;
        return out;
    }

    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    int dim = degree + 1;
    std::vector<double> ata(static_cast<std::size_t>(dim) * dim, 0.0);
    std::vector<double> atb(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double t = xs[i] - mx;
        double powers[3] = {1.0, t, t * t};
        for (int r = 0; r < dim; ++r) {
            atb[r] += powers[r] * ys[i];
            for (int c = 0; c < dim; ++c) ata[static_cast<std::size_t>(r) * dim + c] += powers[r] * powers[c];
        }
    }

    // Gaussian elimination with partial pivoting on the (dim x dim) system.
    double scale = 0.0;
    for (double v : ata) scale = std::max(scale, std::abs(v));
    for (int col = 0; col < dim; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim; ++r) {
            if (std::abs(ata[static_cast<std::size_t>(r) * dim + col]) >
                std::abs(ata[static_cast<std::size_t>(piv) * dim + col])) {
                piv = r;
            }
        }
        double pval = ata[static_cast<std::size_t>(piv) * dim + col];
        if (std::abs(pval) <= 1e-12 * scale) {
            throw contract_error("fit_poly: singular design matrix");
        }
        if (piv != col) {
            for (int c = 0; c < dim; ++c) {
                std::swap(ata[static_cast<std::size_t>(piv) * dim + c],
                          ata[static_cast<std::size_t>(col) * dim + c]);
            }
            std::swap(atb[piv], atb[col]);
        }
        for (int r = 0; r < dim; ++r) {
            if (r == col) continue;
            double factor = ata[static_cast<std::size_t>(r) * dim + col] /
                            ata[static_cast<std::size_t>(col) * dim + col];
            for (int c = col; c < dim; ++c) {
                ata[static_cast<std::size_t>(r) * dim + c] -=
                    factor * ata[static_cast<std::size_t>(col) * dim + c];
            }
            atb[r] -= factor * atb[col];
        }
    }
    std::vector<double> b(dim);
    for (int r = 0; r < dim; ++r) b[r] = atb[r] / ata[static_cast<std::size_t>(r) * dim + r];

    // Back-substitute the centering: y = b0 + b1 (x - mx) + b2 (x - mx)^2.
    out.coeffs.assign(dim, 0.0);
    if (degree == 1) {
        out.coeffs[0] = b[0] - b[1] * mx;
        out.coeffs[1] = b[1];
    } else {
        out.coeffs[0] = b[0] - b[1] * mx + b[2] * mx * mx;
        out.coeffs[1] = b[1] - 2.0 * b[2] * mx;
        out.coeffs[2] = b[2];
    }

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = xs[i] - mx;
        double pred = b[0] + b[1] * t + (degree == 2 ? b[2] * t * t : 0.0);
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - my) * (ys[i] - my);
    }
    out.r2 = ss_tot == 0.0 ? 0.0 : 1.0 - ss_res / ss_tot;
    return out;
}

CorrelationReport summarize(const std::vector<SweepRecord>& records) {
    std::vector<double> xs, ys;
    int excluded = 0;
    for (const auto& rec : records) {
        if (!rec.sg) {
            ++excluded;
            continue;
        }
        xs.push_back(rec.swept_value);
        ys.push_back(*rec.sg);
    }
    CorrelationReport rep;
    rep.count = static_cast<int>(xs.size());
    rep.count_excluded = excluded;
    rep.pearson = pearson(xs, ys);
    rep.spearman = spearman(xs, ys);
    PolyFit lin = fit_poly(xs, ys, 1);
    PolyFit quad = fit_poly(xs, ys, 2);
    rep.lin_fit = lin.coeffs;
    rep.r2_lin = lin.r2;
    rep.quad_fit = quad.coeffs;
    rep.r2_quad = quad.r2;
    return rep;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
    return v ? format_g17(*v) : std::string();
}

std::optional<double> parse_opt(const std::string& s, const std::string& ctx) {
    if (s.empty()) return std::nullopt;
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw io_error(ctx + ": malformed number '" + s + "'");
    }
}

}  // namespace

void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    os << "sample_index,seed,problem,generator,n,rho,w,D,r,sigma,a,C,lambda,"
          "swept_name,swept_value,sg,min_energy,ground_degeneracy\n";
    for (const auto& rec : records) {
        os << rec.sample_index << "," << rec.seed << "," << to_string(rec.problem) << ","
           << to_string(rec.generator) << "," << rec.n << "," << opt_field(rec.rho) << ","
           << opt_field(rec.w) << "," << opt_field(rec.d) << "," << opt_field(rec.r) << ","
           << opt_field(rec.sigma) << "," << opt_field(rec.a) << "," << opt_field(rec.c) << ","
           << opt_field(rec.lambda) << "," << rec.swept_name << ","
           << format_g17(rec.swept_value) << "," << opt_field(rec.sg) << ","
           << format_g17(rec.min_energy) << "," << rec.ground_degeneracy << "\n";
    }
    if (!os) throw io_error("write failed for '" + path + "'");
}

std::vector<SweepRecord> read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(is, line)) throw io_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string header =
        "sample_index,seed,problem,generator,n,rho,w,D,r,sigma,a,C,lambda,"
        "swept_name,swept_value,sg,min_energy,ground_degeneracy";
    if (line != header) throw io_error(path + " line 1: unexpected header");

    std::vector<SweepRecord> records;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string ctx = path + " line " + std::to_string(lineno);

        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.push_back("");
        if (fields.size() != 18) {
            throw io_error(ctx + ": expected 18 fields, got " + std::to_string(fields.size()));
        }
        try {
            SweepRecord rec;
            rec.sample_index = std::stoull(fields[0]);
            rec.seed = std::stoull(fields[1]);
            rec.problem = problem_from_string(fields[2]);
            rec.generator = generator_from_string(fields[3]);
            rec.n = std::stoi(fields[4]);
            rec.rho = parse_opt(fields[5], ctx);
            rec.w = parse_opt(fields[6], ctx);
            rec.d = parse_opt(fields[7], ctx);
            rec.r = parse_opt(fields[8], ctx);
            rec.sigma = parse_opt(fields[9], ctx);
            rec.a = parse_opt(fields[10], ctx);
            rec.c = parse_opt(fields[11], ctx);
            rec.lambda = parse_opt(fields[12], ctx);
            rec.swept_name = fields[13];
            rec.swept_value = std::stod(fields[14]);
            rec.sg = parse_opt(fields[15], ctx);
            rec.min_energy = std::stod(fields[16]);
            rec.ground_degeneracy = std::stoull(fields[17]);
            records.push_back(std::move(rec));
        } catch (const io_error&) {
            throw;
        } catch (const contract_error&) {
            throw io_error(ctx + ": malformed row");
        } catch (const std::exception&) {
            throw io_error(ctx + ": malformed row");
        }
    }
    return records;
}

void write_summary(const CorrelationReport& rep, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    os << "count: " << rep.count << "\n";
    os << "count_excluded: " << rep.count_excluded << "\n";
    os << "pearson: " << format_g17(rep.pearson) << "\n";
    os << "spearman: " << format_g17(rep.spearman) << "\n";
    os << "lin_fit: " << format_g17(rep.lin_fit[0]) << " " << format_g17(rep.lin_fit[1]) << "\n";
    os << "quad_fit: " << format_g17(rep.quad_fit[0]) << " " << format_g17(rep.quad_fit[1]) << " "
       << format_g17(rep.quad_fit[2]) << "\n";
    os << "r2_lin: " << format_g17(rep.r2_lin) << "\n";
    os << "r2_quad: " << format_g17(rep.r2_quad) << "\n";
    if (!os) throw io_error("write failed for '" + path + "'");
}

}  // namespace qgl
