#pragma once

#include <cstdint>
#include <vector>

#include "rsqueue/distributions.hpp"
#include "rsqueue/grid_path.hpp"
#include "rsqueue/rng.hpp"

namespace rsq {

/// Work offered to the system: sorted arrival epochs with matched service
/// requirements (draws landing in a sub-probability law's infinity atom are
/// counted in total_drawn but carry no work).
struct OfferedWork {
    std::vector<double> arrivals;
    std::vector<double> works;
    double total = 0.0;
    std::size_t total_drawn = 0;
};

OfferedWork sample_offered(const ServiceModel& service, const ScatterModel& scatter,
                           std::size_t n, RandomStream& rng);

/// Gamma_n(s,t] = sum of works with arrival in the half-open interval (s,t].
/// Throws PreconditionError for s >= t.
double offered_work(const OfferedWork& ow, double s, double t);

/// Closed-form covariance of offered work over two intervals (s1,s2], (t1,t2]:
/// n(EV^2 P(T in overlap) - (EV)^2 P(T in I1) P(T in I2)), overlap per the
/// left-interval-first convention (empty when the intervals are disjoint).
double offered_cov(const ServiceModel& service, const ScatterModel& scatter,
                   std::size_t n, double s1, double s2, double t1, double t2);

enum class WorkloadScaling { Raw, Fluid, Diffusion };

struct WorkloadRealization {
    GridPath path;
    std::size_t n = 0;
    double c = 0.0; // work units per unit time
    WorkloadScaling scaling = WorkloadScaling::Raw;
};

/// Workload at a single time: exact Lindley recursion over arrival epochs,
/// rate-c drain with reflection at zero between events.
double workload_at(const OfferedWork& ow, double c, double t);

/// Workload sampled onto a grid; the reflection is computed event-exactly and
/// the grid is output-only.
WorkloadRealization workload_path(const OfferedWork& ow, std::size_t n, double c,
                                  const GridSpec& grid);

/// Arrival coupling across periods: fresh scatter draws every slot, or one
/// scatter pattern repeated every slot (services are fresh either way).
enum class ArrivalCoupling { Fresh, Shared };

struct PeriodicConfig {
    double period = 1.0;
    std::size_t num_periods = 1;
    std::size_t n = 0; // population per slot
    ScatterModel scatter = ScatterModel::uniform01();
    ArrivalCoupling coupling = ArrivalCoupling::Fresh;
};

/// Offered work of the periodic model on [0, num_periods * T].
OfferedWork sample_periodic_offered(const PeriodicConfig& cfg,
                                    const ServiceModel& service, RandomStream& rng);

WorkloadRealization periodic_workload_path(const PeriodicConfig& cfg,
                                           const ServiceModel& service, double c,
                                           const GridSpec& grid, RandomStream& rng);

struct TailSimProblem {
    ServiceModel service = ServiceModel::exponential(1.0);
    ScatterModel scatter = ScatterModel::uniform01();
    double t = 0.5;
    double c_prime = 1.0; // service rate per customer: c = n c'
    double x = 0.5;       // scaled exceedance: event {W_n(t) > n x}
};

struct TailEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::size_t reps = 0;
};

/// Plain Monte Carlo estimate of P(W_n(t) > n x) with binomial standard error.
TailEstimate crude_tail_estimate(const TailSimProblem& problem, std::size_t n,
                                 std::size_t reps, std::uint64_t seed,
                                 std::uint64_t stream_base = 0, unsigned workers = 1);

} // namespace rsq
