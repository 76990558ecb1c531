/* rsqueue.h - C API for the RS/G/1 transitory-queue library.
 *
 * Conventions:
 *   - every fallible function returns rsq_status; outputs go through pointers
 *   - handles are opaque; destroy with the matching _free function
 *   - rsq_last_error() returns a thread-local message for the last failure
 *   - sampling functions are pure given (seed, stream): replication k always
 *     uses stream_base + k, independent of how work is distributed
 */
#ifndef RSQUEUE_H
#define RSQUEUE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RSQ_API __declspec(dllexport)
#else
#define RSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsq_status {
    RSQ_OK = 0,
    RSQ_ERR_INVALID_ARG = 1,  /* malformed input (null pointer, bad sizes) */
    RSQ_ERR_DOMAIN = 2,       /* parameter outside a mathematical domain */
    RSQ_ERR_PRECONDITION = 3, /* model-hypothesis violation (e.g. x-condition) */
    RSQ_ERR_ROOT = 4,         /* tilt root unreachable */
    RSQ_ERR_INTERNAL = 5
} rsq_status;

RSQ_API const char* rsq_version(void);
RSQ_API const char* rsq_last_error(void);

/* ------------------------------------------------------------- service law */
typedef struct rsq_service rsq_service;

RSQ_API rsq_status rsq_service_create_deterministic(double value, rsq_service** out);
RSQ_API rsq_status rsq_service_create_exponential(double mean, rsq_service** out);
RSQ_API rsq_status rsq_service_create_bounded_uniform(double lo, double hi,
                                                      rsq_service** out);
RSQ_API rsq_status rsq_service_create_gamma(double shape, double scale,
                                            rsq_service** out);
RSQ_API void rsq_service_free(rsq_service* s);

RSQ_API double rsq_service_mean(const rsq_service* s);
RSQ_API double rsq_service_variance(const rsq_service* s);
RSQ_API double rsq_service_second_moment(const rsq_service* s);
RSQ_API double rsq_service_scv(const rsq_service* s);
RSQ_API double rsq_service_theta_max(const rsq_service* s);
RSQ_API rsq_status rsq_service_mgf(const rsq_service* s, double theta, double* out);
RSQ_API rsq_status rsq_service_mgf_prime(const rsq_service* s, double theta,
                                         double* out);
RSQ_API rsq_status rsq_service_sample(const rsq_service* s, uint64_t seed,
                                      uint64_t stream, size_t count, double* out);

/* ---------------------------------------------------------- scattering law */
typedef struct rsq_scatter rsq_scatter;

RSQ_API rsq_status rsq_scatter_create_uniform01(rsq_scatter** out);
RSQ_API rsq_status rsq_scatter_create_exponential(double rate, rsq_scatter** out);
/* Sub-probability wrapper: keeps a copy of base (base stays owned by caller). */
RSQ_API rsq_status rsq_scatter_create_sub_probability(const rsq_scatter* base,
                                                      double deficit,
                                                      rsq_scatter** out);
/* q_kind: 0 none, 1 linear (q = param * t), 2 saturating (q = 1 - e^{-param t}) */
RSQ_API rsq_status rsq_scatter_create_perturbed_uniform(int q_kind, double q_param,
                                                        double drift_a, double n,
                                                        rsq_scatter** out);
RSQ_API void rsq_scatter_free(rsq_scatter* s);

RSQ_API double rsq_scatter_cdf(const rsq_scatter* s, double t);
RSQ_API double rsq_scatter_density(const rsq_scatter* s, double t);
RSQ_API rsq_status rsq_scatter_quantile(const rsq_scatter* s, double u, double* out);
RSQ_API double rsq_scatter_deficit(const rsq_scatter* s);
/* n sorted finite arrivals (infinity-atom draws dropped); *out_count receives
 * the finite count. out must hold n doubles. */
RSQ_API rsq_status rsq_scatter_sample_arrivals(const rsq_scatter* s, size_t n,
                                               uint64_t seed, uint64_t stream,
                                               double* out, size_t* out_count);

/* --------------------------------------------------------- Gaussian limits */
/* Brownian bridge on [0,1] with m cells: out has m+1 nodes. */
RSQ_API rsq_status rsq_brownian_bridge_path(size_t m, uint64_t seed, uint64_t stream,
                                            double* out);
/* Z = sigma_V B1(F) + EV1 B2^0(F) on a grid over [t0,t1]. */
RSQ_API rsq_status rsq_z_process_path(const rsq_service* service,
                                      const rsq_scatter* scatter, double t0, double t1,
                                      size_t m, uint64_t seed, uint64_t stream,
                                      double* out);
/* Skorokhod reflection of a sampled path (in place allowed: out may equal in). */
RSQ_API rsq_status rsq_reflection_map(const double* in, size_t n, double* out);
/* Fluid workload sup_{s<=t}(EV1(F(t)-F(s)) - rho (t-s)). */
RSQ_API rsq_status rsq_fluid_workload(const rsq_service* service,
                                      const rsq_scatter* scatter, double rho, double t,
                                      double* out);
/* Diffusion-limit workload path Psi(Z + EV1(q - a e)) over [0,1]. */
RSQ_API rsq_status rsq_diffusion_workload_path(double a, int q_kind, double q_param,
                                               double deficit_b, double ev1,
                                               double sigma_v, size_t m, uint64_t seed,
                                               uint64_t stream, double* out);

/* ------------------------------------------------------------- queue model */
/* One exact workload replication sampled on a grid of m cells over [0, t1];
 * c is the absolute service rate (work per unit time). */
RSQ_API rsq_status rsq_workload_path(const rsq_service* service,
                                     const rsq_scatter* scatter, size_t n, double c,
                                     double t1, size_t m, uint64_t seed,
                                     uint64_t stream, double* out_path,
                                     double* out_sup);
/* Periodic model (period 1): num_periods slots, population n per slot.
 * coupling: 0 fresh arrivals per slot, 1 shared scatter pattern. */
RSQ_API rsq_status rsq_periodic_workload_path(const rsq_service* service,
                                              const rsq_scatter* scatter, size_t n,
                                              size_t num_periods, int coupling,
                                              double c, size_t m, uint64_t seed,
                                              uint64_t stream, double* out_path);
/* Plain Monte Carlo of P(W_n(t) > n x) with c = n c'. */
RSQ_API rsq_status rsq_crude_tail_estimate(const rsq_service* service,
                                           const rsq_scatter* scatter, double t,
                                           double c_prime, double x, size_t n,
                                           size_t reps, uint64_t seed, unsigned workers,
                                           double* p_hat, double* std_err);

/* ----------------------------------------------------------- transient law */
RSQ_API rsq_status rsq_reflected_bridge_cdf(double lambda, double t, double d,
                                            double* out);
RSQ_API rsq_status rsq_gauss_phi_integral(double a, double b, double c, double* out);
RSQ_API rsq_status rsq_transient_cdf_closed(double lambda, double t, double d,
                                            double sigma_v, double ev1_sq, double* out);
RSQ_API rsq_status rsq_transient_cdf_quadrature(double lambda, double t, double d,
                                                double sigma_v, double ev1_sq,
                                                double* out);
RSQ_API rsq_status rsq_slowly_varying_cdf(double lambda, double t, double q0, double a,
                                          double ev1, double sigma_v, double ev1_sq,
                                          double* out);
/* Monte Carlo CDF of the reflected diffusion at the given levels. */
RSQ_API rsq_status rsq_transient_mc_cdf(const double* lambdas, size_t n_lambdas,
                                        double t, double d, double sigma_v,
                                        double ev1_sq, size_t paths, size_t grid_m,
                                        uint64_t seed, unsigned workers, double* out);

/* --------------------------------------------------------- tail asymptotics */
RSQ_API rsq_status rsq_variance_time_curve(double t, double scv, double* out);
RSQ_API rsq_status rsq_m_curve(double t, double c, double x, double scv, double* out);
RSQ_API rsq_status rsq_t_star(double c, double x, double scv, double* out);
RSQ_API rsq_status rsq_curvature_A(double c, double x, double scv, double* out);
RSQ_API rsq_status rsq_pickands_h(int alpha, double* out);
RSQ_API rsq_status rsq_piterbarg_prefactor(double alpha, double beta, double D,
                                           double sigma, double A, double* out);
/* Asymptotic of P(sup_{[0,1]}(Z~ - c e) > x); boundary regime handled inside. */
RSQ_API rsq_status rsq_tail_asymptotic(double c, double x, double scv, double* out);
RSQ_API rsq_status rsq_tail_mc(double c, double x, double scv, size_t paths,
                               size_t grid_m, uint64_t seed, unsigned workers,
                               double* p_hat, double* std_err);

/* -------------------------------------------------------- large deviations */
typedef struct rsq_ldp rsq_ldp;

/* Fails with RSQ_ERR_PRECONDITION when x violates the rare-event condition. */
RSQ_API rsq_status rsq_ldp_create(const rsq_service* service,
                                  const rsq_scatter* scatter, double t, double x,
                                  double c_prime, rsq_ldp** out);
RSQ_API void rsq_ldp_free(rsq_ldp* p);

RSQ_API rsq_status rsq_ldp_theta_root(const rsq_ldp* p, double s, double* out);
RSQ_API rsq_status rsq_ldp_rate_value(const rsq_ldp* p, double s, double* out);
RSQ_API rsq_status rsq_ldp_rate_profile(const rsq_ldp* p, const double* s, size_t len,
                                        double* out_theta, double* out_rate);
RSQ_API rsq_status rsq_ldp_minimize(const rsq_ldp* p, double* t_star, double* rate);
RSQ_API rsq_status rsq_ldp_twisted_params(const rsq_ldp* p, double* t_star,
                                          double* theta_star, double* v_star);
RSQ_API rsq_status rsq_ldp_rare_event_path(const rsq_ldp* p, const double* s,
                                           size_t len, double* out);
RSQ_API rsq_status rsq_ldp_is_estimate(const rsq_ldp* p, size_t n, size_t reps,
                                       uint64_t seed, unsigned workers, double* p_hat,
                                       double* std_err);

/* ----------------------------------------------------------- periodic laws */
RSQ_API rsq_status rsq_phi_steady(double lambda, double a, double sigma_v2,
                                  double ev1_sq, double* out);
RSQ_API rsq_status rsq_det_service_steady(double x, double* out);
/* steady_warn (may be NULL) is set to 1 when sigma_V^2 >= EV1^2. */
RSQ_API rsq_status rsq_periodic_transient_cdf(double lambda, double t, double a,
                                              double sigma_v2, double ev1_sq,
                                              int* steady_warn, double* out);
RSQ_API rsq_status rsq_periodic_steady_cdf(double lambda, double a, double sigma_v2,
                                           double ev1_sq, double* out);

/* -------------------------------------------------------------- validation */
/* Runs the validation suite. config_json may be NULL/empty or an object with
 * optional keys: seed (u64), workers (int), scale ("quick"|"full"),
 * only ([criterion numbers]), tolerance_overrides ({clause-id: number}).
 * On success *out_report receives a malloc'd JSON verdict (caller frees with
 * rsq_string_free) and *all_pass the overall verdict. */
RSQ_API rsq_status rsq_validate_run(const char* config_json, char** out_report,
                                    int* all_pass);
RSQ_API void rsq_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RSQUEUE_H */
