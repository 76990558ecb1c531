// rsq - command-line front end for the rsqueue shared library.
//
// Subcommands: simulate | fluid | transient | tail | ldp | rare-path |
// is-estimate | periodic | validate. All numeric work goes through the C API
// in rsqueue/rsqueue.h; this tool owns configuration, dataset emission and the
// worker pool.
//
// Exit codes: 0 ok, 1 validation failure, 2 config error, 3 model-hypothesis
// (precondition) violation.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsqueue/rsqueue.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) {
    throw CliError{code, msg};
}

void check_status(rsq_status st, const std::string& what) {
    if (st == RSQ_OK) return;
    const std::string msg = what + ": " + rsq_last_error();
    if (st == RSQ_ERR_PRECONDITION || st == RSQ_ERR_DOMAIN || st == RSQ_ERR_ROOT)
        fail(kExitPrecondition, msg);
    fail(kExitConfig, msg);
}

// ------------------------------------------------------------- configuration

/// FNV-1a over the canonical (sorted-key) dump; stamped into every emission.
std::uint64_t config_hash(const json& j) {
    const std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void apply_env_overrides(json& j, const std::string& prefix, char** envp) {
    // Collect candidate paths: RSQ_A_B matches key path a.b (case-insensitive).
    std::vector<std::pair<std::string, json*>> paths;
    std::function<void(json&, const std::string&)> walk = [&](json& node,
                                                              const std::string& base) {
        if (!node.is_object()) return;
        for (auto& [key, value] : node.items()) {
            std::string name = base.empty() ? key : base + "_" + key;
            std::transform(name.begin(), name.end(), name.begin(),
                           [](unsigned char c) { return std::toupper(c); });
            paths.emplace_back(prefix + name, &value);
            walk(value, base.empty() ? key : base + "_" + key);
        }
    };
    walk(j, "");
    for (char** e = envp; e && *e; ++e) {
        const std::string entry(*e);
        const auto eq = entry.find('=');
        if (eq == std::string::npos) continue;
        const std::string name = entry.substr(0, eq);
        if (name.rfind(prefix, 0) != 0) continue;
        const std::string value = entry.substr(eq + 1);
        bool matched = false;
        for (auto& [cand, slot] : paths) {
            if (cand != name) continue;
            try {
                *slot = json::parse(value);
            } catch (...) {
                *slot = value;
            }
            matched = true;
        }
        if (!matched)
            fail(kExitConfig, "environment override " + name +
                                  " does not match any config key");
    }
}

void reject_unknown_keys(const json& j, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(kExitConfig, "unknown config key '" + key + "' in " + where);
    }
}

json require_key(const json& j, const std::string& key) {
    if (!j.contains(key)) fail(kExitConfig, "missing required config key '" + key + "'");
    return j.at(key);
}

double num_or(const json& j, const std::string& key, double dflt) {
    return j.contains(key) ? j.at(key).get<double>() : dflt;
}

// ------------------------------------------------------------ model builders

struct ServiceHandle {
    rsq_service* p = nullptr;
    ~ServiceHandle() { rsq_service_free(p); }
};
struct ScatterHandle {
    rsq_scatter* p = nullptr;
    ~ScatterHandle() { rsq_scatter_free(p); }
};

void build_service(const json& j, ServiceHandle& out) {
    reject_unknown_keys(j, {"kind", "value", "mean", "lo", "hi", "shape", "scale"},
                        "service");
    const std::string kind = require_key(j, "kind").get<std::string>();
    rsq_status st = RSQ_ERR_INVALID_ARG;
    if (kind == "deterministic")
        st = rsq_service_create_deterministic(num_or(j, "value", 1.0), &out.p);
    else if (kind == "exponential")
        st = rsq_service_create_exponential(num_or(j, "mean", 1.0), &out.p);
    else if (kind == "bounded-uniform")
        st = rsq_service_create_bounded_uniform(num_or(j, "lo", 0.5), num_or(j, "hi", 1.5),
                                                &out.p);
    else if (kind == "gamma")
        st = rsq_service_create_gamma(num_or(j, "shape", 1.0), num_or(j, "scale", 1.0),
                                      &out.p);
    else
        fail(kExitConfig, "service.kind must be one of deterministic | exponential | "
                          "bounded-uniform | gamma");
    check_status(st, "service");
}

void build_scatter(const json& j, ScatterHandle& out) {
    reject_unknown_keys(
        j, {"kind", "rate", "deficit", "base", "q_kind", "q_param", "a", "n"}, "scatter");
    const std::string kind = require_key(j, "kind").get<std::string>();
    rsq_status st = RSQ_ERR_INVALID_ARG;
    if (kind == "uniform")
        st = rsq_scatter_create_uniform01(&out.p);
    else if (kind == "exponential")
        st = rsq_scatter_create_exponential(num_or(j, "rate", 1.0), &out.p);
    else if (kind == "sub-probability") {
        ScatterHandle base;
        build_scatter(require_key(j, "base"), base);
        st = rsq_scatter_create_sub_probability(base.p, num_or(j, "deficit", 0.5), &out.p);
    } else if (kind == "perturbed-uniform") {
        const std::string qk =
            j.contains("q_kind") ? j.at("q_kind").get<std::string>() : "none";
        const int qi = qk == "linear" ? 1 : qk == "exp-sat" ? 2 : 0;
        st = rsq_scatter_create_perturbed_uniform(qi, num_or(j, "q_param", 0.0),
                                                  num_or(j, "a", 0.0),
                                                  num_or(j, "n", 1e4), &out.p);
    } else
        fail(kExitConfig, "scatter.kind must be one of uniform | exponential | "
                          "sub-probability | perturbed-uniform");
    check_status(st, "scatter");
}

// --------------------------------------------------------------- CSV writing

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(const fs::path& path, const Table& table, std::uint64_t seed,
               std::uint64_t hash) {
    std::ofstream f(path);
    if (!f) fail(kExitConfig, "cannot open output file " + path.string());
    f << "# rsqueue " << rsq_version() << "\n";
    f << "# seed=" << seed << " config_hash=" << std::hex << hash << std::dec << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        f << table.columns[i] << (i + 1 < table.columns.size() ? "," : "\n");
    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
            f << buf << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

void write_run_info(const fs::path& dir, const json& config, std::uint64_t seed,
                    std::uint64_t hash, double wall_seconds) {
    json info;
    info["version"] = rsq_version();
    info["seed"] = seed;
    info["config_hash"] = hash;
    info["wallclock_s"] = wall_seconds;
    info["config"] = config;
    std::ofstream f(dir / "run_info.json");
    f << info.dump(2) << "\n";
}

void parallel_reps(std::size_t reps, unsigned workers,
                   const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || reps < 2) {
        for (std::size_t i = 0; i < reps; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = reps * w / workers;
            const std::size_t hi = reps * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct CommonArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    unsigned workers = 0;
    std::string out_dir = ".";
};

json load_config(const CommonArgs& args, char** envp) {
    json j = json::object();
    if (!args.config_path.empty()) {
        std::ifstream f(args.config_path);
        if (!f) fail(kExitConfig, "cannot read config file " + args.config_path);
        try {
            f >> j;
        } catch (const std::exception& e) {
            fail(kExitConfig, std::string("config parse error: ") + e.what());
        }
    }
    apply_env_overrides(j, "RSQ_", envp);
    return j;
}

std::uint64_t pick_seed(const CommonArgs& args, const json& j) {
    if (args.seed_set) return args.seed;
    return static_cast<std::uint64_t>(num_or(j, "seed", 20250801.0));
}

unsigned pick_workers(const CommonArgs& args, const json& j) {
    if (args.workers != 0) return args.workers;
    const unsigned w = static_cast<unsigned>(num_or(j, "workers", 0.0));
    if (w != 0) return w;
    const unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

// ----------------------------------------------------------------- commands

int cmd_simulate(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg,
                        {"seed", "workers", "n", "c_abs", "c_prime", "a", "service",
                         "scatter", "horizon", "grid_m", "reps", "paths_out",
                         "num_periods", "coupling"},
                        "simulate");
    ServiceHandle service;
    ScatterHandle scatter;
    build_service(require_key(cfg, "service"), service);
    build_scatter(require_key(cfg, "scatter"), scatter);
    const std::size_t n = static_cast<std::size_t>(require_key(cfg, "n").get<double>());
    const std::size_t reps = static_cast<std::size_t>(num_or(cfg, "reps", 1.0));
    const std::size_t grid_m = static_cast<std::size_t>(num_or(cfg, "grid_m", 256.0));
    const std::size_t num_periods =
        static_cast<std::size_t>(num_or(cfg, "num_periods", 1.0));
    const double horizon = num_or(cfg, "horizon", static_cast<double>(num_periods));
    double c;
    if (cfg.contains("c_abs"))
        c = cfg.at("c_abs").get<double>();
    else
        c = static_cast<double>(n) * num_or(cfg, "c_prime", 1.0) +
            num_or(cfg, "a", 0.0) * std::sqrt(static_cast<double>(n));
    const int coupling =
        cfg.contains("coupling") && cfg.at("coupling").get<std::string>() == "shared" ? 1
                                                                                      : 0;
    const std::size_t paths_out =
        std::min<std::size_t>(static_cast<std::size_t>(num_or(cfg, "paths_out", 0.0)), reps);
    const std::uint64_t seed = pick_seed(args, cfg);
    const unsigned workers = pick_workers(args, cfg);
    const std::uint64_t hash = config_hash(cfg);

    std::vector<double> sup_w(reps), w_end(reps);
    std::vector<std::vector<double>> kept(paths_out);
    parallel_reps(reps, workers, [&](std::size_t k) {
        std::vector<double> path(grid_m + 1);
        if (num_periods > 1) {
            check_status(rsq_periodic_workload_path(service.p, scatter.p, n, num_periods,
                                                    coupling, c, grid_m, seed, k,
                                                    path.data()),
                         "periodic_workload_path");
            double s = 0.0;
            for (double v : path) s = std::max(s, v);
            sup_w[k] = s;
        } else {
            check_status(rsq_workload_path(service.p, scatter.p, n, c, horizon, grid_m,
                                           seed, k, path.data(), &sup_w[k]),
                         "workload_path");
        }
        w_end[k] = path.back();
        if (k < paths_out) kept[k] = path;
    });

    const double dn = static_cast<double>(n);
    Table summary;
    summary.columns = {"rep", "sup_w", "sup_w_over_n", "w_end_over_sqrt_n"};
    for (std::size_t k = 0; k < reps; ++k)
        summary.rows.push_back(
            {static_cast<double>(k), sup_w[k], sup_w[k] / dn, w_end[k] / std::sqrt(dn)});
    fs::create_directories(args.out_dir);
    write_csv(fs::path(args.out_dir) / "summary.csv", summary, seed, hash);

    double max_sup_over_n = 0.0;
    for (double v : sup_w) max_sup_over_n = std::max(max_sup_over_n, v / dn);
    Table stats;
    stats.columns = {"reps", "max_sup_w_over_n"};
    stats.rows.push_back({static_cast<double>(reps), max_sup_over_n});
    write_csv(fs::path(args.out_dir) / "stats.csv", stats, seed, hash);

    if (paths_out > 0) {
        Table paths;
        paths.columns = {"rep", "t", "w"};
        for (std::size_t k = 0; k < paths_out; ++k)
            for (std::size_t i = 0; i <= grid_m; ++i)
                paths.rows.push_back(
                    {static_cast<double>(k),
                     horizon * static_cast<double>(i) / static_cast<double>(grid_m),
                     kept[k][i]});
        write_csv(fs::path(args.out_dir) / "paths.csv", paths, seed, hash);
    }
    return kExitOk;
}

int cmd_fluid(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg, {"seed", "workers", "service", "scatter", "rho", "t_max",
                              "points"},
                        "fluid");
    ServiceHandle service;
    ScatterHandle scatter;
    build_service(require_key(cfg, "service"), service);
    build_scatter(require_key(cfg, "scatter"), scatter);
    const double rho = num_or(cfg, "rho", 1.0);
    const double t_max = num_or(cfg, "t_max", 1.0);
    const int points = static_cast<int>(num_or(cfg, "points", 101.0));
    Table t;
    t.columns = {"t", "fluid_workload"};
    for (int i = 0; i < points; ++i) {
        const double tt = t_max * i / (points - 1);
        double v = 0.0;
        check_status(rsq_fluid_workload(service.p, scatter.p, rho, tt, &v), "fluid");
        t.rows.push_back({tt, v});
    }
    fs::create_directories(args.out_dir);
    write_csv(fs::path(args.out_dir) / "fluid.csv", t, pick_seed(args, cfg),
              config_hash(cfg));
    return kExitOk;
}

int cmd_transient(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg,
                        {"seed", "workers", "t", "d", "sigma_v", "ev1_sq", "lambda_max",
                         "points", "mc_paths", "mc_grid"},
                        "transient");
    const double t = num_or(cfg, "t", 0.5);
    const double d = num_or(cfg, "d", 0.5);
    const double sigma_v = num_or(cfg, "sigma_v", 0.5);
    const double ev1_sq = num_or(cfg, "ev1_sq", 1.25);
    const double lambda_max = num_or(cfg, "lambda_max", 3.0);
    const int points = static_cast<int>(num_or(cfg, "points", 61.0));
    const std::size_t mc_paths = static_cast<std::size_t>(num_or(cfg, "mc_paths", 0.0));
    const std::size_t mc_grid = static_cast<std::size_t>(num_or(cfg, "mc_grid", 2048.0));
    const std::uint64_t seed = pick_seed(args, cfg);
    const unsigned workers = pick_workers(args, cfg);

    std::vector<double> lambdas(points);
    for (int i = 0; i < points; ++i) lambdas[i] = lambda_max * i / (points - 1);
    std::vector<double> mc(points, std::nan(""));
    if (mc_paths > 0)
        check_status(rsq_transient_mc_cdf(lambdas.data(), lambdas.size(), t, d, sigma_v,
                                          ev1_sq, mc_paths, mc_grid, seed, workers,
                                          mc.data()),
                     "transient MC");

    Table out;
    out.columns = {"lambda", "closed", "quadrature", "mc", "closed_minus_quadrature"};
    for (int i = 0; i < points; ++i) {
        double closed = 0.0, quad = 0.0;
        check_status(rsq_transient_cdf_closed(lambdas[i], t, d, sigma_v, ev1_sq, &closed),
                     "transient closed");
        check_status(
            rsq_transient_cdf_quadrature(lambdas[i], t, d, sigma_v, ev1_sq, &quad),
            "transient quadrature");
        out.rows.push_back({lambdas[i], closed, quad, mc[i], std::abs(closed - quad)});
    }
    fs::create_directories(args.out_dir);
    write_csv(fs::path(args.out_dir) / "transient.csv", out, seed, config_hash(cfg));
    return kExitOk;
}

int cmd_tail(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg,
                        {"seed", "workers", "c", "scv", "x_min", "x_max", "points",
                         "mc_paths", "mc_grid"},
                        "tail");
    const double c = num_or(cfg, "c", 1.0);
    const double scv = num_or(cfg, "scv", 0.5);
    const double x_min = num_or(cfg, "x_min", 0.5);
    const double x_max = num_or(cfg, "x_max", 3.0);
    const int points = static_cast<int>(num_or(cfg, "points", 26.0));
    const std::size_t mc_paths = static_cast<std::size_t>(num_or(cfg, "mc_paths", 0.0));
    const std::size_t mc_grid = static_cast<std::size_t>(num_or(cfg, "mc_grid", 128.0));
    const std::uint64_t seed = pick_seed(args, cfg);
    const unsigned workers = pick_workers(args, cfg);

    Table out;
    out.columns = {"x", "t_star", "m_star", "asymptotic", "mc", "mc_se"};
    for (int i = 0; i < points; ++i) {
        const double x = x_min + (x_max - x_min) * i / std::max(points - 1, 1);
        double ts = 0.0, ms = 0.0, asym = 0.0;
        check_status(rsq_t_star(c, x, scv, &ts), "t_star");
        check_status(rsq_m_curve(ts, c, x, scv, &ms), "m_curve");
        check_status(rsq_tail_asymptotic(c, x, scv, &asym), "tail asymptotic");
        double mc = std::nan(""), se = std::nan("");
        if (mc_paths > 0)
            check_status(rsq_tail_mc(c, x, scv, mc_paths, mc_grid, seed, workers, &mc, &se),
                         "tail MC");
        out.rows.push_back({x, ts, ms, asym, mc, se});
    }
    fs::create_directories(args.out_dir);
    write_csv(fs::path(args.out_dir) / "tail.csv", out, seed, config_hash(cfg));
    return kExitOk;
}

int make_ldp(const json& cfg, ServiceHandle& service, ScatterHandle& scatter,
             rsq_ldp** ldp) {
    build_service(require_key(cfg, "service"), service);
    build_scatter(require_key(cfg, "scatter"), scatter);
    const double t = require_key(cfg, "t").get<double>();
    const double x = require_key(cfg, "x").get<double>();
    const double c_prime = require_key(cfg, "c_prime").get<double>();
    const rsq_status st = rsq_ldp_create(service.p, scatter.p, t, x, c_prime, ldp);
    if (st == RSQ_ERR_PRECONDITION) {
        std::cerr << "rare-event condition violated: " << rsq_last_error() << "\n";
        return kExitPrecondition;
    }
    check_status(st, "ldp problem");
    return kExitOk;
}

int cmd_ldp(const CommonArgs& args, const json& cfg, bool rare_path_only) {
    reject_unknown_keys(cfg, {"seed", "workers", "service", "scatter", "t", "x",
                              "c_prime", "points"},
                        "ldp");
    ServiceHandle service;
    ScatterHandle scatter;
    rsq_ldp* ldp = nullptr;
    if (int rc = make_ldp(cfg, service, scatter, &ldp); rc != kExitOk) return rc;
    const double t = cfg.at("t").get<double>();
    const int points = static_cast<int>(num_or(cfg, "points", 200.0));
    const std::uint64_t seed = pick_seed(args, cfg);
    const std::uint64_t hash = config_hash(cfg);

    std::vector<double> s(points);
    for (int i = 0; i < points; ++i) s[i] = (t - 1e-6) * i / (points - 1);

    fs::create_directories(args.out_dir);
    double t_star = 0.0, rate = 0.0, theta_star = 0.0, v_star = 0.0;
    check_status(rsq_ldp_minimize(ldp, &t_star, &rate), "rate minimize");
    check_status(rsq_ldp_twisted_params(ldp, &t_star, &theta_star, &v_star),
                 "twisted params");

    if (!rare_path_only) {
        std::vector<double> theta(points), iprime(points);
        check_status(rsq_ldp_rate_profile(ldp, s.data(), s.size(), theta.data(),
                                          iprime.data()),
                     "rate profile");
        Table prof;
        prof.columns = {"s", "theta", "rate"};
        for (int i = 0; i < points; ++i) prof.rows.push_back({s[i], theta[i], iprime[i]});
        write_csv(fs::path(args.out_dir) / "rate_profile.csv", prof, seed, hash);
    }

    std::vector<double> pathvals(points);
    std::vector<double> s_full(points);
    for (int i = 0; i < points; ++i) s_full[i] = t * i / (points - 1);
    check_status(rsq_ldp_rare_event_path(ldp, s_full.data(), s_full.size(),
                                         pathvals.data()),
                 "rare path");
    Table path;
    path.columns = {"s", "expected_cumulative_work"};
    for (int i = 0; i < points; ++i) path.rows.push_back({s_full[i], pathvals[i]});
    write_csv(fs::path(args.out_dir) / "rare_path.csv", path, seed, hash);

    Table mini;
    mini.columns = {"t_star", "rate_at_t_star", "theta_star", "v_star"};
    mini.rows.push_back({t_star, rate, theta_star, v_star});
    write_csv(fs::path(args.out_dir) / "minimizer.csv", mini, seed, hash);

    std::printf("t* = %.6f, I'(t*) = %.6f, theta* = %.6f\n", t_star, rate, theta_star);
    rsq_ldp_free(ldp);
    return kExitOk;
}

int cmd_is_estimate(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg, {"seed", "workers", "service", "scatter", "t", "x",
                              "c_prime", "n", "reps", "crude_reps"},
                        "is-estimate");
    ServiceHandle service;
    ScatterHandle scatter;
    rsq_ldp* ldp = nullptr;
    if (int rc = make_ldp(cfg, service, scatter, &ldp); rc != kExitOk) return rc;
    const std::size_t n = static_cast<std::size_t>(num_or(cfg, "n", 20.0));
    const std::size_t reps = static_cast<std::size_t>(num_or(cfg, "reps", 100000.0));
    const std::size_t crude_reps =
        static_cast<std::size_t>(num_or(cfg, "crude_reps", 0.0));
    const std::uint64_t seed = pick_seed(args, cfg);
    const unsigned workers = pick_workers(args, cfg);

    Table out;
    out.columns = {"method", "p_hat", "std_err", "reps"};
    double p = 0.0, se = 0.0;
    check_status(rsq_ldp_is_estimate(ldp, n, reps, seed, workers, &p, &se), "IS");
    out.rows.push_back({0.0, p, se, static_cast<double>(reps)});
    std::printf("IS: p = %.6e (se %.2e)\n", p, se);
    if (crude_reps > 0) {
        double pc = 0.0, sec = 0.0;
        check_status(rsq_crude_tail_estimate(service.p, scatter.p,
                                             cfg.at("t").get<double>(),
                                             cfg.at("c_prime").get<double>(),
                                             cfg.at("x").get<double>(), n, crude_reps,
                                             seed + 1, workers, &pc, &sec),
                     "crude MC");
        out.rows.push_back({1.0, pc, sec, static_cast<double>(crude_reps)});
        std::printf("crude: p = %.6e (se %.2e)\n", pc, sec);
    }
    fs::create_directories(args.out_dir);
    write_csv(fs::path(args.out_dir) / "is_estimate.csv", out, seed, config_hash(cfg));
    rsq_ldp_free(ldp);
    return kExitOk;
}

int cmd_periodic(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg, {"seed", "workers", "a", "sigma_v2", "ev1_sq", "t",
                              "lambda_max", "points"},
                        "periodic");
    const double a = num_or(cfg, "a", 0.5);
    const double sv2 = num_or(cfg, "sigma_v2", 0.25);
    const double ev1sq = num_or(cfg, "ev1_sq", 1.0);
    const double t = num_or(cfg, "t", 25.0);
    const double lambda_max = num_or(cfg, "lambda_max", 3.0);
    const int points = static_cast<int>(num_or(cfg, "points", 61.0));

    Table out;
    out.columns = {"lambda", "one_period", "transient", "steady", "det_service"};
    for (int i = 0; i < points; ++i) {
        const double lam = lambda_max * i / (points - 1);
        double phi = 0.0, tr = 0.0, st = 0.0, det = 0.0;
        int warn = 0;
        check_status(rsq_phi_steady(lam, a, sv2, ev1sq, &phi), "phi");
        check_status(rsq_periodic_transient_cdf(lam, t, a, sv2, ev1sq, &warn, &tr),
                     "transient");
        check_status(rsq_periodic_steady_cdf(lam, a, sv2, ev1sq, &st), "steady");
        check_status(rsq_det_service_steady(lam, &det), "det");
        out.rows.push_back({lam, phi, tr, st, det});
    }
    fs::create_directories(args.out_dir);
    write_csv(fs::path(args.out_dir) / "periodic.csv", out, pick_seed(args, cfg),
              config_hash(cfg));
    return kExitOk;
}

int cmd_validate(const CommonArgs& args, const json& cfg) {
    reject_unknown_keys(cfg, {"seed", "workers", "scale", "only", "tolerance_overrides"},
                        "validate");
    json vc = cfg;
    vc["seed"] = pick_seed(args, cfg);
    vc["workers"] = pick_workers(args, cfg);
    char* report = nullptr;
    int all_pass = 0;
    check_status(rsq_validate_run(vc.dump().c_str(), &report, &all_pass), "validate");
    const std::string text = report;
    rsq_string_free(report);
    std::cout << text << "\n";
    fs::create_directories(args.out_dir);
    std::ofstream f(fs::path(args.out_dir) / "validation.json");
    f << text << "\n";
    if (!all_pass) {
        const auto j = json::parse(text);
        for (const auto& c : j.at("criteria"))
            if (!c.at("pass").get<bool>())
                std::cerr << "FAILED criterion " << c.at("number") << ": "
                          << c.at("name").get<std::string>() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv, char** envp) {
    CLI::App app{"rsqueue - transitory RS/G/1 queue laboratory"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string seed_str;
    for (auto* sub : {app.add_subcommand("simulate", "exact workload simulation"),
                      app.add_subcommand("fluid", "fluid workload table"),
                      app.add_subcommand("transient", "transient reflected-Gaussian law"),
                      app.add_subcommand("tail", "extreme-value asymptotics"),
                      app.add_subcommand("ldp", "rate profile and rare-event path"),
                      app.add_subcommand("rare-path", "rare-event path only"),
                      app.add_subcommand("is-estimate", "importance-sampling estimator"),
                      app.add_subcommand("periodic", "periodic steady/transient laws"),
                      app.add_subcommand("validate", "run the validation suite")}) {
        sub->add_option("--config", args.config_path, "JSON config file");
        sub->add_option("--seed", seed_str, "RNG seed (overrides config)");
        sub->add_option("--workers", args.workers, "worker threads");
        sub->add_option("--out", args.out_dir, "output directory");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (!seed_str.empty()) {
            args.seed = std::stoull(seed_str);
            args.seed_set = true;
        }
        const json cfg = load_config(args, envp);
        const auto started = std::chrono::steady_clock::now();
        int rc = kExitConfig;
        if (app.got_subcommand("simulate")) rc = cmd_simulate(args, cfg);
        else if (app.got_subcommand("fluid")) rc = cmd_fluid(args, cfg);
        else if (app.got_subcommand("transient")) rc = cmd_transient(args, cfg);
        else if (app.got_subcommand("tail")) rc = cmd_tail(args, cfg);
        else if (app.got_subcommand("ldp")) rc = cmd_ldp(args, cfg, false);
        else if (app.got_subcommand("rare-path")) rc = cmd_ldp(args, cfg, true);
        else if (app.got_subcommand("is-estimate")) rc = cmd_is_estimate(args, cfg);
        else if (app.got_subcommand("periodic")) rc = cmd_periodic(args, cfg);
        else if (app.got_subcommand("validate")) rc = cmd_validate(args, cfg);
        if (rc == kExitOk && !app.got_subcommand("validate")) {
            const double secs = std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - started)
                                    .count();
            fs::create_directories(args.out_dir);
            write_run_info(args.out_dir, cfg, pick_seed(args, cfg), config_hash(cfg),
                           secs);
        }
        return rc;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
