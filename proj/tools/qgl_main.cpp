// Copyright 2026 The qgl Authors
// SPDX-License-Identifier: Apache-2.0

// qgl: generate synthetic clustering/SVM data sets, embed them into QUBO
// form, compute exact spectral gaps, analyze annealing Hamiltonians at
// small scale, and run seeded parameter sweeps.
//
// Exit codes: 0 success, 1 contract/validation error, 2 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "qgl/annealing.hpp"
#include "qgl/common.hpp"
#include "qgl/datagen.hpp"
#include "qgl/embeddings.hpp"
#include "qgl/harness.hpp"
#include "qgl/kernels.hpp"
#include "qgl/qubo.hpp"
#include "qgl/rng.hpp"
#include "qgl/spectrum.hpp"

namespace {

using qgl::format_g17;

std::string json_opt(const std::optional<double>& v) {
    return v ? format_g17(*v) : std::string("null");
}

void cmd_gen(const std::string& family, int n, double rho, double w, double d, double r,
             double sigma, double a, std::uint64_t seed, const std::string& out) {
    qgl::DataSet ds;
    if (family == "cones") {
        ds = qgl::gen_cones({n, rho, w, d, seed});
    } else if (family == "circles") {
        ds = qgl::gen_circles({n, r, sigma, a, seed});
    } else {
        throw qgl::contract_error("gen: --family must be cones or circles");
    }
    qgl::write_dataset_csv(ds, out);
    int neg = 0;
    for (int y : ds.labels) neg += y == -1;
    std::cout << "n: " << ds.size() << "\n";
    std::cout << "labels_neg: " << neg << "\n";
    std::cout << "labels_pos: " << ds.size() - neg << "\n";
    std::cout << "min_cross_distance: " << format_g17(qgl::min_cross_distance(ds)) << "\n";
    std::cout << "out: " << out << "\n";
}

void cmd_qubo(const std::string& problem, const std::string& in, const std::string& kernel,
              double a, std::optional<double> c, std::optional<double> lambda, bool normalize,
              const std::string& out) {
    qgl::DataSet ds = qgl::read_dataset_csv(in);
    qgl::KernelMatrix km;
    if (kernel == "linear") {
        km = qgl::gram_linear(ds);
    } else if (kernel == "circles") {
        km = qgl::gram_circles(ds, a);
    } else {
        throw qgl::contract_error("qubo: --kernel must be linear or circles");
    }

    qgl::QuboInstance q(1);
    if (problem == "clustering") {
        q = qgl::clustering_qubo(qgl::center_kernel(km));
    } else if (problem == "svm") {
        if (!c || !lambda) throw qgl::contract_error("qubo: svm requires --c and --lambda");
        q = qgl::svm_qubo(km, ds.labels, {*c, *lambda});
    } else {
        throw qgl::contract_error("qubo: --problem must be clustering or svm");
    }
    if (normalize) q = qgl::normalize_inf(q);
    qgl::write_qubo_file(q, out);
    std::cout << "n: " << q.n() << "\n";
    std::cout << "max_abs: " << format_g17(q.max_abs()) << "\n";
    std::cout << "out: " << out << "\n";
}

void cmd_gap(const std::string& in, bool force_large, int threads) {
    qgl::QuboInstance q = qgl::read_qubo_file(in);
    qgl::EnumerateOptions opts;
    opts.threads = threads;
    opts.allow_large = force_large;
    qgl::SpectrumSummary s = qgl::enumerate_spectrum(q, opts);
    std::string bits;
    for (int b : s.ground_state) bits.push_back(b ? '1' : '0');
    std::cout << "{\"n\": " << q.n() << ", \"min_energy\": " << format_g17(s.min_energy)
              << ", \"second_energy\": " << json_opt(s.second_energy)
              << ", \"gap\": " << json_opt(s.gap)
              << ", \"ground_degeneracy\": " << s.ground_degeneracy << ", \"ground_state\": \""
              << bits << "\"}\n";
}

void cmd_ahgap(const std::string& in, int grid, int threads) {
    qgl::QuboInstance q = qgl::read_qubo_file(in);
    if (q.n() > 12) {
        throw qgl::contract_error("ahgap: dense analysis requires n <= 12, got n = " +
                                  std::to_string(q.n()));
    }
    qgl::AnnealSchedule sched = qgl::AnnealSchedule::linear();
    qgl::MinGapResult mg = qgl::min_gap_schedule(q, sched, grid, threads);

    double lo1 = std::numeric_limits<double>::infinity();
    double lo2 = std::numeric_limits<double>::infinity();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << q.n()); ++b) {
        double e = qgl::energy(q, b);
        if (e < lo1) {
            lo2 = lo1;
            lo1 = e;
        } else if (e < lo2) {
            lo2 = e;
        }
    }
    double gap_hp = lo2 - lo1;
    bool ok = mg.gap <= std::min(gap_hp, 2.0) + 1e-8;
    std::cout << "s_star: " << format_g17(mg.s_star) << "\n";
    std::cout << "min_gap: " << format_g17(mg.gap) << "\n";
    std::cout << "gap_hp: " << format_g17(gap_hp) << "\n";
    std::cout << "gap_hi: 2\n";
    std::cout << "bound_ok: " << (ok ? "true" : "false") << "\n";
}

void cmd_weyl(int dim, int trials, std::uint64_t seed) {
    if (dim < 2 || dim > 128) throw qgl::contract_error("weyl-check: --dim must be in [2, 128]");
    if (trials < 1) throw qgl::contract_error("weyl-check: --trials must be >= 1");
    int violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        qgl::SplitMix64Stream rng(qgl::mix_seed(seed, static_cast<std::uint64_t>(t)));
        qgl::DenseHamiltonian n = qgl::make_hamiltonian(dim);
        qgl::DenseHamiltonian r = qgl::make_hamiltonian(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = i; j < dim; ++j) {
                double vn = rng.next_uniform(-1, 1);
                double vr = rng.next_uniform(-1, 1);
                n.at(i, j) = n.at(j, i) = vn;
                r.at(i, j) = r.at(j, i) = vr;
            }
        }
        qgl::WeylReport rep = qgl::weyl_check(n, r);
        if (!rep.ok || !rep.sum_bound_ok) ++violations;
        worst = std::max(worst, rep.max_violation);
    }
    std::cout << "dim: " << dim << "\n";
    std::cout << "trials: " << trials << "\n";
    std::cout << "max_violation: " << format_g17(worst) << "\n";
    std::cout << violations << " violations\n";
    if (violations > 0) throw qgl::contract_error("weyl-check: bounds violated");
}

// Flat key=value config files mirror the sweep flags; flags given on the
// command line take precedence.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw qgl::io_error("cannot open config '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw qgl::io_error(path + " line " + std::to_string(lineno) +
                                ": expected key=value");
        }
        auto trim = [](std::string s) {
            std::size_t b = s.find_first_not_of(" \t");
            std::size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw qgl::io_error(path + " line " + std::to_string(lineno) + ": empty key");
        }
        kv[key] = value;
    }
    return kv;
}

struct SweepCli {
    std::string config;
    std::string problem;
    std::string generator;
    int n = -1;
    int samples = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string swept;
    double lo = 0.0, hi = 0.0;
    bool lo_set = false, hi_set = false;
    std::string swept2;
    double lo2 = 0.0, hi2 = 0.0;
    std::map<std::string, double> fixed;  // parameters given via flags
    bool normalize = true;
    bool normalize_set = false;
    std::string out;
    std::string summary;
};

void cmd_sweep(SweepCli& cli, const std::map<std::string, bool>& flag_given, int threads) {
    if (!cli.config.empty()) {
        auto kv = load_config(cli.config);
        auto fill_str = [&](const char* key, std::string& slot) {
            if (!flag_given.at(key) && kv.count(key)) slot = kv.at(key);
        };
        auto fill_num = [&](const char* key, auto& slot) {
            if (!flag_given.at(key) && kv.count(key)) {
                slot = static_cast<std::remove_reference_t<decltype(slot)>>(std::stod(kv.at(key)));
            }
        };
        fill_str("problem", cli.problem);
        fill_str("generator", cli.generator);
        fill_str("swept", cli.swept);
        fill_str("swept2", cli.swept2);
        fill_str("out", cli.out);
        fill_str("summary", cli.summary);
        fill_num("n", cli.n);
        fill_num("samples", cli.samples);
        if (!flag_given.at("seed") && kv.count("seed")) {
            cli.seed = std::stoull(kv.at("seed"));
            cli.seed_set = true;
        }
        if (!flag_given.at("lo") && kv.count("lo")) {
            cli.lo = std::stod(kv.at("lo"));
            cli.lo_set = true;
        }
        if (!flag_given.at("hi") && kv.count("hi")) {
            cli.hi = std::stod(kv.at("hi"));
            cli.hi_set = true;
        }
        fill_num("lo2", cli.lo2);
        fill_num("hi2", cli.hi2);
        if (!flag_given.at("normalize") && kv.count("normalize")) {
            const std::string& v = kv.at("normalize");
            cli.normalize = v == "true" || v == "1" || v == "yes";
        }
        for (const char* param : {"rho", "w", "D", "r", "sigma", "a", "C", "lambda"}) {
            if (!cli.fixed.count(param) && kv.count(param)) {
                cli.fixed[param] = std::stod(kv.at(param));
            }
        }
    }

    if (cli.problem.empty()) throw qgl::contract_error("sweep: missing problem");
    if (cli.generator.empty()) throw qgl::contract_error("sweep: missing generator");
    if (cli.n < 0) throw qgl::contract_error("sweep: missing n");
    if (cli.samples < 0) throw qgl::contract_error("sweep: missing samples");
    if (cli.swept.empty()) throw qgl::contract_error("sweep: missing swept parameter name");
    if (!cli.lo_set || !cli.hi_set) throw qgl::contract_error("sweep: missing lo/hi interval");
    if (!cli.seed_set) throw qgl::contract_error("sweep: missing seed");
    if (cli.out.empty()) throw qgl::contract_error("sweep: missing output path");

    qgl::SweepConfig cfg;
    cfg.problem = qgl::problem_from_string(cli.problem);
    cfg.generator = qgl::generator_from_string(cli.generator);
    cfg.n = cli.n;
    cfg.samples = cli.samples;
    cfg.master_seed = cli.seed;
    cfg.swept_name = cli.swept;
    cfg.lo = cli.lo;
    cfg.hi = cli.hi;
    if (!cli.swept2.empty()) {
        cfg.swept2_name = cli.swept2;
        cfg.lo2 = cli.lo2;
        cfg.hi2 = cli.hi2;
    }
    cfg.fixed = cli.fixed;
    cfg.normalize = cli.normalize;

    auto records = qgl::run_sweep(cfg, threads);
    qgl::write_csv(records, cli.out);
    std::cout << "records: " << records.size() << "\n";
    std::cout << "out: " << cli.out << "\n";
    if (!cli.summary.empty()) {
        qgl::CorrelationReport rep = qgl::summarize(records);
        qgl::write_summary(rep, cli.summary);
        std::cout << "summary: " << cli.summary << "\n";
        std::cout << "spearman: " << format_g17(rep.spearman) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QUBO spectral-gap toolkit: data generators, clustering/SVM embeddings, exact "
                 "enumeration, annealing-gap analysis, parameter sweeps"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    int threads = 0;
    app.add_option("--threads", threads, "Worker cap (default: QGL_THREADS env or all cores)");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a synthetic data set CSV");
    std::string gen_family, gen_out;
    int gen_n = 0;
    double gen_rho = 0.5, gen_w = 0.2, gen_d = 0.0, gen_r = 0.5, gen_sigma = 0.0, gen_a = 1.0;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family, "cones|circles")->required();
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--rho", gen_rho, "cones cluster size ratio");
    gen->add_option("--w", gen_w, "cones spread");
    gen->add_option("--d", gen_d, "cones separating margin");
    gen->add_option("--r", gen_r, "circles inner radius");
    gen->add_option("--sigma", gen_sigma, "circles noise std deviation");
    gen->add_option("--a", gen_a, "circles feature-map coefficient");
    gen->add_option("--seed", gen_seed, "64-bit seed")->required();
    gen->add_option("--out", gen_out, "output CSV path")->required();
    gen->callback([&]() {
        cmd_gen(gen_family, gen_n, gen_rho, gen_w, gen_d, gen_r, gen_sigma, gen_a, gen_seed,
                gen_out);
    });

    // qubo
    auto* qb = app.add_subcommand("qubo", "Embed a data set CSV into a QUBO file");
    std::string qb_problem, qb_in, qb_out, qb_kernel = "linear";
    double qb_a = 1.0;
    std::optional<double> qb_c, qb_lambda;
    bool qb_norm = false;
    qb->add_option("--problem", qb_problem, "clustering|svm")->required();
    qb->add_option("--in", qb_in, "input data set CSV")->required();
    qb->add_option("--kernel", qb_kernel, "linear|circles (default linear)");
    qb->add_option("--a", qb_a, "circles kernel coefficient");
    qb->add_option("--c", qb_c, "svm box constraint C");
    qb->add_option("--lambda", qb_lambda, "svm penalty weight");
    qb->add_flag("--normalize", qb_norm, "scale so the max absolute entry is 1");
    qb->add_option("--out", qb_out, "output QUBO path")->required();
    qb->callback(
        [&]() { cmd_qubo(qb_problem, qb_in, qb_kernel, qb_a, qb_c, qb_lambda, qb_norm, qb_out); });

    // gap
    auto* gap = app.add_subcommand("gap", "Exact spectrum summary of a QUBO file");
    std::string gap_in;
    bool gap_force = false;
    gap->add_option("--in", gap_in, "input QUBO path")->required();
    gap->add_flag("--force-large", gap_force, "allow n in (28, 32]");
    gap->callback([&]() { cmd_gap(gap_in, gap_force, threads); });

    // ahgap
    auto* ah = app.add_subcommand("ahgap", "Minimal annealing-Hamiltonian gap over the schedule");
    std::string ah_in;
    int ah_grid = 201;
    ah->add_option("--in", ah_in, "input QUBO path")->required();
    ah->add_option("--grid", ah_grid, "schedule grid points (default 201)");
    ah->callback([&]() { cmd_ahgap(ah_in, ah_grid, threads); });

    // sweep
    auto* sw = app.add_subcommand("sweep", "Seeded parameter sweep producing a records CSV");
    SweepCli cli;
    auto* o_problem = sw->add_option("--problem", cli.problem, "clustering|svm");
    auto* o_generator = sw->add_option("--generator", cli.generator, "cones|circles");
    auto* o_n = sw->add_option("--n", cli.n, "points per data set");
    auto* o_samples = sw->add_option("--samples", cli.samples, "number of samples");
    auto* o_seed = sw->add_option("--seed", cli.seed, "master seed");
    auto* o_swept = sw->add_option("--swept", cli.swept, "swept parameter name");
    auto* o_lo = sw->add_option("--lo", cli.lo, "interval lower bound");
    auto* o_hi = sw->add_option("--hi", cli.hi, "interval upper bound");
    auto* o_swept2 = sw->add_option("--swept2", cli.swept2, "second swept parameter");
    auto* o_lo2 = sw->add_option("--lo2", cli.lo2, "second interval lower bound");
    auto* o_hi2 = sw->add_option("--hi2", cli.hi2, "second interval upper bound");
    auto* o_norm = sw->add_flag("--normalize,!--no-normalize", cli.normalize,
                                "normalize instances (default on)");
    auto* o_out = sw->add_option("--out", cli.out, "records CSV path");
    auto* o_summary = sw->add_option("--summary", cli.summary, "summary text path");
    auto* o_config = sw->add_option("--config", cli.config, "flat key=value config file");
    std::map<std::string, double> fixed_opts;
    std::map<std::string, CLI::Option*> fixed_handles;
    const std::pair<const char*, const char*> fixed_flags[] = {
        {"rho", "--rho"}, {"w", "--w"},         {"D", "--d"}, {"r", "--r"},
        {"sigma", "--sigma"}, {"a", "--a"},     {"C", "--c"}, {"lambda", "--lambda"}};
    for (auto [param, flag] : fixed_flags) {
        fixed_opts[param] = 0.0;
        fixed_handles[param] =
            sw->add_option(flag, fixed_opts[param], std::string("fixed value for ") + param);
    }
    sw->callback([&]() {
        cli.seed_set = o_seed->count() > 0;
        cli.lo_set = o_lo->count() > 0;
        cli.hi_set = o_hi->count() > 0;
        cli.normalize_set = o_norm->count() > 0;
        for (auto& [param, handle] : fixed_handles) {
            if (handle->count() > 0) cli.fixed[param] = fixed_opts[param];
        }
        std::map<std::string, bool> given = {
            {"problem", o_problem->count() > 0}, {"generator", o_generator->count() > 0},
            {"n", o_n->count() > 0},             {"samples", o_samples->count() > 0},
            {"seed", o_seed->count() > 0},       {"swept", o_swept->count() > 0},
            {"lo", o_lo->count() > 0},           {"hi", o_hi->count() > 0},
            {"swept2", o_swept2->count() > 0},   {"lo2", o_lo2->count() > 0},
            {"hi2", o_hi2->count() > 0},         {"normalize", o_norm->count() > 0},
            {"out", o_out->count() > 0},         {"summary", o_summary->count() > 0},
        };
        cmd_sweep(cli, given, threads);
    });

    // weyl-check
    auto* weyl = app.add_subcommand("weyl-check", "Weyl eigenvalue bounds on random pairs");
    int weyl_dim = 0, weyl_trials = 0;
    std::uint64_t weyl_seed = 0;
    weyl->add_option("--dim", weyl_dim, "matrix dimension")->required();
    weyl->add_option("--trials", weyl_trials, "number of random pairs")->required();
    weyl->add_option("--seed", weyl_seed, "64-bit seed")->required();
    weyl->callback([&]() { cmd_weyl(weyl_dim, weyl_trials, weyl_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const qgl::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qgl::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
