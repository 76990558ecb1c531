#include "rsqueue/rsqueue.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsqueue/distributions.hpp"
#include "rsqueue/errors.hpp"
#include "rsqueue/gaussian_paths.hpp"
#include "rsqueue/ldp.hpp"
#include "rsqueue/limits.hpp"
#include "rsqueue/periodic_law.hpp"
#include "rsqueue/queue_sim.hpp"
#include "rsqueue/tail_asymptotics.hpp"
#include "rsqueue/transient_law.hpp"
#include "rsqueue/validate.hpp"
#include "rsqueue/version.hpp"

namespace {

thread_local std::string g_last_error;

rsq_status set_error(rsq_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

template <typename Fn>
rsq_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const rsq::RootNotFoundError& e) {
        return set_error(RSQ_ERR_ROOT, e.what());
    } catch (const rsq::DomainError& e) {
        return set_error(RSQ_ERR_DOMAIN, e.what());
    } catch (const rsq::PreconditionError& e) {
        return set_error(RSQ_ERR_PRECONDITION, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(RSQ_ERR_INVALID_ARG, e.what());
    } catch (const std::exception& e) {
        return set_error(RSQ_ERR_INTERNAL, e.what());
    }
}

} // namespace

struct rsq_service {
    rsq::ServiceModel model;
};
struct rsq_scatter {
    rsq::ScatterModel model;
};
struct rsq_ldp {
    rsq::LdpProblem problem;
};

extern "C" {

const char* rsq_version(void) { return RSQ_VERSION_STRING; }

const char* rsq_last_error(void) { return g_last_error.c_str(); }

/* ------------------------------------------------------------- service law */

static rsq_status make_service(rsq::ServiceModel m, rsq_service** out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output pointer");
    *out = new (std::nothrow) rsq_service{std::move(m)};
    return *out ? RSQ_OK : set_error(RSQ_ERR_INTERNAL, "allocation failed");
}

rsq_status rsq_service_create_deterministic(double value, rsq_service** out) {
    return guarded([&] { return make_service(rsq::ServiceModel::deterministic(value), out); });
}
rsq_status rsq_service_create_exponential(double mean, rsq_service** out) {
    return guarded([&] { return make_service(rsq::ServiceModel::exponential(mean), out); });
}
rsq_status rsq_service_create_bounded_uniform(double lo, double hi, rsq_service** out) {
    return guarded([&] { return make_service(rsq::ServiceModel::bounded_uniform(lo, hi), out); });
}
rsq_status rsq_service_create_gamma(double shape, double scale, rsq_service** out) {
    return guarded([&] { return make_service(rsq::ServiceModel::gamma(shape, scale), out); });
}
void rsq_service_free(rsq_service* s) { delete s; }

double rsq_service_mean(const rsq_service* s) { return s->model.mean(); }
double rsq_service_variance(const rsq_service* s) { return s->model.variance(); }
double rsq_service_second_moment(const rsq_service* s) { return s->model.second_moment(); }
double rsq_service_scv(const rsq_service* s) { return s->model.scv(); }
double rsq_service_theta_max(const rsq_service* s) { return s->model.theta_max(); }

rsq_status rsq_service_mgf(const rsq_service* s, double theta, double* out) {
    if (!s || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = s->model.mgf(theta);
        return RSQ_OK;
    });
}
rsq_status rsq_service_mgf_prime(const rsq_service* s, double theta, double* out) {
    if (!s || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = s->model.mgf_prime(theta);
        return RSQ_OK;
    });
}
rsq_status rsq_service_sample(const rsq_service* s, uint64_t seed, uint64_t stream,
                              size_t count, double* out) {
    if (!s || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        rsq::RandomStream rng(seed, stream);
        for (size_t i = 0; i < count; ++i) out[i] = s->model.sample(rng);
        return RSQ_OK;
    });
}

/* ---------------------------------------------------------- scattering law */

static rsq_status make_scatter(rsq::ScatterModel m, rsq_scatter** out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output pointer");
    *out = new (std::nothrow) rsq_scatter{std::move(m)};
    return *out ? RSQ_OK : set_error(RSQ_ERR_INTERNAL, "allocation failed");
}

rsq_status rsq_scatter_create_uniform01(rsq_scatter** out) {
    return guarded([&] { return make_scatter(rsq::ScatterModel::uniform01(), out); });
}
rsq_status rsq_scatter_create_exponential(double rate, rsq_scatter** out) {
    return guarded([&] { return make_scatter(rsq::ScatterModel::exponential(rate), out); });
}
rsq_status rsq_scatter_create_sub_probability(const rsq_scatter* base, double deficit,
                                              rsq_scatter** out) {
    if (!base) return set_error(RSQ_ERR_INVALID_ARG, "null base");
    return guarded([&] {
        return make_scatter(rsq::ScatterModel::sub_probability(base->model, deficit), out);
    });
}
rsq_status rsq_scatter_create_perturbed_uniform(int q_kind, double q_param,
                                                double drift_a, double n,
                                                rsq_scatter** out) {
    return guarded([&] {
        rsq::QSpec q;
        q.kind = q_kind == 1   ? rsq::QKind::Linear
                 : q_kind == 2 ? rsq::QKind::ExpSat
                               : rsq::QKind::Zero;
        q.param = q_param;
        return make_scatter(rsq::ScatterModel::perturbed_uniform(q, drift_a, n), out);
    });
}
void rsq_scatter_free(rsq_scatter* s) { delete s; }

double rsq_scatter_cdf(const rsq_scatter* s, double t) { return s->model.cdf(t); }
double rsq_scatter_density(const rsq_scatter* s, double t) { return s->model.density(t); }
double rsq_scatter_deficit(const rsq_scatter* s) { return s->model.deficit(); }

rsq_status rsq_scatter_quantile(const rsq_scatter* s, double u, double* out) {
    if (!s || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = s->model.quantile(u);
        return RSQ_OK;
    });
}
rsq_status rsq_scatter_sample_arrivals(const rsq_scatter* s, size_t n, uint64_t seed,
                                       uint64_t stream, double* out, size_t* out_count) {
    if (!s || !out || !out_count) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        rsq::RandomStream rng(seed, stream);
        const auto a = s->model.sample_arrivals(n, rng);
        *out_count = a.times.size();
        std::memcpy(out, a.times.data(), a.times.size() * sizeof(double));
        return RSQ_OK;
    });
}

/* --------------------------------------------------------- Gaussian limits */

rsq_status rsq_brownian_bridge_path(size_t m, uint64_t seed, uint64_t stream,
                                    double* out) {
    if (!out || m == 0) return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    return guarded([&] {
        rsq::RandomStream rng(seed, stream);
        const auto p = rsq::brownian_bridge_path(rsq::GridSpec(0.0, 1.0, m), rng);
        std::memcpy(out, p.values.data(), p.values.size() * sizeof(double));
        return RSQ_OK;
    });
}

rsq_status rsq_z_process_path(const rsq_service* service, const rsq_scatter* scatter,
                              double t0, double t1, size_t m, uint64_t seed,
                              uint64_t stream, double* out) {
    if (!service || !scatter || !out || m == 0)
        return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    return guarded([&] {
        rsq::RandomStream rng(seed, stream);
        const auto p =
            rsq::z_process_path(service->model, scatter->model, rsq::GridSpec(t0, t1, m), rng);
        std::memcpy(out, p.values.data(), p.values.size() * sizeof(double));
        return RSQ_OK;
    });
}

rsq_status rsq_reflection_map(const double* in, size_t n, double* out) {
    if (!in || !out || n == 0) return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    double runmin = in[0];
    for (size_t i = 0; i < n; ++i) {
        runmin = in[i] < runmin ? in[i] : runmin;
        out[i] = in[i] - runmin;
    }
    return RSQ_OK;
}

rsq_status rsq_fluid_workload(const rsq_service* service, const rsq_scatter* scatter,
                              double rho, double t, double* out) {
    if (!service || !scatter || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = rsq::fluid_workload(t, service->model, scatter->model, rho);
        return RSQ_OK;
    });
}

rsq_status rsq_diffusion_workload_path(double a, int q_kind, double q_param,
                                       double deficit_b, double ev1, double sigma_v,
                                       size_t m, uint64_t seed, uint64_t stream,
                                       double* out) {
    if (!out || m == 0) return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    return guarded([&] {
        rsq::Regime regime;
        regime.a = a;
        regime.q.kind = q_kind == 1   ? rsq::QKind::Linear
                        : q_kind == 2 ? rsq::QKind::ExpSat
                                      : rsq::QKind::Zero;
        regime.q.param = q_param;
        regime.b = deficit_b;
        regime.ev1 = ev1;
        regime.sigma_v = sigma_v;
        rsq::RandomStream rng(seed, stream);
        const auto p = rsq::diffusion_workload_path(regime, rsq::GridSpec(0.0, 1.0, m), rng);
        std::memcpy(out, p.values.data(), p.values.size() * sizeof(double));
        return RSQ_OK;
    });
}

/* ------------------------------------------------------------- queue model */

rsq_status rsq_workload_path(const rsq_service* service, const rsq_scatter* scatter,
                             size_t n, double c, double t1, size_t m, uint64_t seed,
                             uint64_t stream, double* out_path, double* out_sup) {
    if (!service || !scatter || !out_path || m == 0)
        return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    return guarded([&] {
        rsq::RandomStream rng(seed, stream);
        const auto ow = rsq::sample_offered(service->model, scatter->model, n, rng);
        const auto w = rsq::workload_path(ow, n, c, rsq::GridSpec(0.0, t1, m));
        std::memcpy(out_path, w.path.values.data(), w.path.values.size() * sizeof(double));
        if (out_sup) {
            double s = 0.0;
            for (double v : w.path.values) s = v > s ? v : s;
            *out_sup = s;
        }
        return RSQ_OK;
    });
}

rsq_status rsq_periodic_workload_path(const rsq_service* service,
                                      const rsq_scatter* scatter, size_t n,
                                      size_t num_periods, int coupling, double c,
                                      size_t m, uint64_t seed, uint64_t stream,
                                      double* out_path) {
    if (!service || !scatter || !out_path || m == 0)
        return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    return guarded([&] {
        rsq::PeriodicConfig cfg;
        cfg.num_periods = num_periods;
        cfg.n = n;
        cfg.scatter = scatter->model;
        cfg.coupling = coupling == 1 ? rsq::ArrivalCoupling::Shared
                                     : rsq::ArrivalCoupling::Fresh;
        rsq::RandomStream rng(seed, stream);
        const auto w = rsq::periodic_workload_path(
            cfg, service->model, c,
            rsq::GridSpec(0.0, static_cast<double>(num_periods), m), rng);
        std::memcpy(out_path, w.path.values.data(), w.path.values.size() * sizeof(double));
        return RSQ_OK;
    });
}

rsq_status rsq_crude_tail_estimate(const rsq_service* service,
                                   const rsq_scatter* scatter, double t, double c_prime,
                                   double x, size_t n, size_t reps, uint64_t seed,
                                   unsigned workers, double* p_hat, double* std_err) {
    if (!service || !scatter || !p_hat || !std_err)
        return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        rsq::TailSimProblem pr;
        pr.service = service->model;
        pr.scatter = scatter->model;
        pr.t = t;
        pr.c_prime = c_prime;
        pr.x = x;
        const auto est = rsq::crude_tail_estimate(pr, n, reps, seed, 0, workers);
        *p_hat = est.p_hat;
        *std_err = est.std_err;
        return RSQ_OK;
    });
}

/* ----------------------------------------------------------- transient law */

rsq_status rsq_reflected_bridge_cdf(double lambda, double t, double d, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::reflected_bridge_cdf(lambda, t, d);
        return RSQ_OK;
    });
}
rsq_status rsq_gauss_phi_integral(double a, double b, double c, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::gauss_phi_integral(a, b, c);
        return RSQ_OK;
    });
}
rsq_status rsq_transient_cdf_closed(double lambda, double t, double d, double sigma_v,
                                    double ev1_sq, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::reflected_diffusion_cdf_closed({t, lambda, d, sigma_v, ev1_sq});
        return RSQ_OK;
    });
}
rsq_status rsq_transient_cdf_quadrature(double lambda, double t, double d,
                                        double sigma_v, double ev1_sq, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::reflected_diffusion_cdf_quadrature({t, lambda, d, sigma_v, ev1_sq});
        return RSQ_OK;
    });
}
rsq_status rsq_slowly_varying_cdf(double lambda, double t, double q0, double a,
                                  double ev1, double sigma_v, double ev1_sq,
                                  double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::slowly_varying_limit_cdf(lambda, t, q0, a, ev1, sigma_v, ev1_sq);
        return RSQ_OK;
    });
}
rsq_status rsq_transient_mc_cdf(const double* lambdas, size_t n_lambdas, double t,
                                double d, double sigma_v, double ev1_sq, size_t paths,
                                size_t grid_m, uint64_t seed, unsigned workers,
                                double* out) {
    if (!lambdas || !out || n_lambdas == 0)
        return set_error(RSQ_ERR_INVALID_ARG, "bad arguments");
    return guarded([&] {
        const std::vector<double> ls(lambdas, lambdas + n_lambdas);
        const auto cdf = rsq::reflected_diffusion_mc_cdf(ls, t, d, sigma_v, ev1_sq,
                                                         paths, grid_m, seed, 0, workers);
        std::memcpy(out, cdf.data(), cdf.size() * sizeof(double));
        return RSQ_OK;
    });
}

/* --------------------------------------------------------- tail asymptotics */

rsq_status rsq_variance_time_curve(double t, double scv, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::variance_time_curve(t, scv);
        return RSQ_OK;
    });
}
rsq_status rsq_m_curve(double t, double c, double x, double scv, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::m_curve(t, {c, x, scv});
        return RSQ_OK;
    });
}
rsq_status rsq_t_star(double c, double x, double scv, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::t_star({c, x, scv});
        return RSQ_OK;
    });
}
rsq_status rsq_curvature_A(double c, double x, double scv, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::curvature_A({c, x, scv});
        return RSQ_OK;
    });
}
rsq_status rsq_pickands_h(int alpha, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::pickands_H(alpha);
        return RSQ_OK;
    });
}
rsq_status rsq_piterbarg_prefactor(double alpha, double beta, double D, double sigma,
                                   double A, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::piterbarg_prefactor(alpha, beta, D, sigma, A);
        return RSQ_OK;
    });
}
rsq_status rsq_tail_asymptotic(double c, double x, double scv, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::tail_prob_raw_level({c, x, scv});
        return RSQ_OK;
    });
}
rsq_status rsq_tail_mc(double c, double x, double scv, size_t paths, size_t grid_m,
                       uint64_t seed, unsigned workers, double* p_hat, double* std_err) {
    if (!p_hat || !std_err) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        const auto r = rsq::tail_prob_mc({c, x, scv}, paths, grid_m, seed, 0, workers);
        *p_hat = r.p_hat;
        *std_err = r.std_err;
        return RSQ_OK;
    });
}

/* -------------------------------------------------------- large deviations */

rsq_status rsq_ldp_create(const rsq_service* service, const rsq_scatter* scatter,
                          double t, double x, double c_prime, rsq_ldp** out) {
    if (!service || !scatter || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = new rsq_ldp{rsq::LdpProblem(service->model, scatter->model, t, x, c_prime)};
        return RSQ_OK;
    });
}
void rsq_ldp_free(rsq_ldp* p) { delete p; }

rsq_status rsq_ldp_theta_root(const rsq_ldp* p, double s, double* out) {
    if (!p || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = rsq::theta_root(s, p->problem);
        return RSQ_OK;
    });
}
rsq_status rsq_ldp_rate_value(const rsq_ldp* p, double s, double* out) {
    if (!p || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        *out = rsq::rate_value(s, p->problem);
        return RSQ_OK;
    });
}
rsq_status rsq_ldp_rate_profile(const rsq_ldp* p, const double* s, size_t len,
                                double* out_theta, double* out_rate) {
    if (!p || !s || !out_theta || !out_rate)
        return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        for (size_t i = 0; i < len; ++i) {
            out_theta[i] = rsq::theta_root(s[i], p->problem);
            out_rate[i] = rsq::rate_value(s[i], p->problem);
        }
        return RSQ_OK;
    });
}
rsq_status rsq_ldp_minimize(const rsq_ldp* p, double* t_star, double* rate) {
    if (!p || !t_star || !rate) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const auto [ts, r] = rsq::rate_minimize(p->problem);
        *t_star = ts;
        *rate = r;
        return RSQ_OK;
    });
}
rsq_status rsq_ldp_twisted_params(const rsq_ldp* p, double* t_star, double* theta_star,
                                  double* v_star) {
    if (!p || !t_star || !theta_star || !v_star)
        return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const auto tw = rsq::make_twisted_law(p->problem);
        *t_star = tw.t_star;
        *theta_star = tw.theta_star;
        *v_star = tw.v_star;
        return RSQ_OK;
    });
}
rsq_status rsq_ldp_rare_event_path(const rsq_ldp* p, const double* s, size_t len,
                                   double* out) {
    if (!p || !s || !out) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const auto tw = rsq::make_twisted_law(p->problem);
        for (size_t i = 0; i < len; ++i)
            out[i] = rsq::rare_event_path(s[i], tw, p->problem);
        return RSQ_OK;
    });
}
rsq_status rsq_ldp_is_estimate(const rsq_ldp* p, size_t n, size_t reps, uint64_t seed,
                               unsigned workers, double* p_hat, double* std_err) {
    if (!p || !p_hat || !std_err) return set_error(RSQ_ERR_INVALID_ARG, "null argument");
    return guarded([&] {
        const auto est = rsq::is_estimate(p->problem, n, reps, seed, 0, workers);
        *p_hat = est.p_hat;
        *std_err = est.std_err;
        return RSQ_OK;
    });
}

/* ----------------------------------------------------------- periodic laws */

rsq_status rsq_phi_steady(double lambda, double a, double sigma_v2, double ev1_sq,
                          double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::phi_steady(lambda, a, sigma_v2, ev1_sq);
        return RSQ_OK;
    });
}
rsq_status rsq_det_service_steady(double x, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        *out = rsq::det_service_steady(x);
        return RSQ_OK;
    });
}
rsq_status rsq_periodic_transient_cdf(double lambda, double t, double a,
                                      double sigma_v2, double ev1_sq, int* steady_warn,
                                      double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        rsq::PeriodicGaussParams p;
        p.a = a;
        p.sigma_v2 = sigma_v2;
        p.ev1_sq = ev1_sq;
        p.t = t;
        bool warn = false;
        *out = rsq::periodic_transient_cdf(lambda, p, &warn);
        if (steady_warn) *steady_warn = warn ? 1 : 0;
        return RSQ_OK;
    });
}
rsq_status rsq_periodic_steady_cdf(double lambda, double a, double sigma_v2,
                                   double ev1_sq, double* out) {
    if (!out) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&] {
        rsq::PeriodicGaussParams p;
        p.a = a;
        p.sigma_v2 = sigma_v2;
        p.ev1_sq = ev1_sq;
        p.t = 2.0;
        *out = rsq::periodic_steady_cdf(lambda, p);
        return RSQ_OK;
    });
}

/* -------------------------------------------------------------- validation */

rsq_status rsq_validate_run(const char* config_json, char** out_report, int* all_pass) {
    if (!out_report || !all_pass) return set_error(RSQ_ERR_INVALID_ARG, "null output");
    return guarded([&]() -> rsq_status {
        rsq::ValidationOptions opt;
        if (config_json && config_json[0] != '\0') {
            const auto j = nlohmann::json::parse(config_json);
            if (j.contains("seed")) opt.seed = j.at("seed").get<uint64_t>();
            if (j.contains("workers")) opt.workers = j.at("workers").get<unsigned>();
            if (j.contains("scale"))
                opt.scale = j.at("scale").get<std::string>() == "full"
                                ? rsq::ValidationScale::Full
                                : rsq::ValidationScale::Quick;
            if (j.contains("only"))
                opt.only = j.at("only").get<std::vector<int>>();
            if (j.contains("tolerance_overrides"))
                for (const auto& [k, v] : j.at("tolerance_overrides").items())
                    opt.tolerance_overrides[k] = v.get<double>();
        }
        const auto results = rsq::run_validation(opt);
        const std::string report = rsq::validation_report_json(results, opt);
        char* buf = static_cast<char*>(std::malloc(report.size() + 1));
        if (!buf) return set_error(RSQ_ERR_INTERNAL, "allocation failed");
        std::memcpy(buf, report.c_str(), report.size() + 1);
        *out_report = buf;
        *all_pass = rsq::validation_all_pass(results) ? 1 : 0;
        return RSQ_OK;
    });
}

void rsq_string_free(char* s) { std::free(s); }

} /* extern "C" */
