#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sticky/potentials.hpp"

namespace sticky {

struct SemConfig {
  PotentialSpec potential;
  double dt = 1e-4;
  double t_final = 1.0;
  double x0 = 0.0;
  std::uint64_t seed = 0;
  std::int64_t store_stride = 1;  // keep every stride-th grid point
};

// Positions on the uniform grid k*dt (subject to store_stride); reflection
// keeps every entry >= 0.
struct SemPath {
  std::vector<double> times;
  std::vector<double> positions;

  // Stored position nearest to t; throws if no stored time is within half a
  // storage interval of t.
  double position_at(double t) const;
};

// One reflected Euler step |x + force(x) dt + sqrt(2) dw|; dw is the
// Brownian increment over dt.  Throws if the result is not finite.
double sem_step(double x, double dw, double dt, const PotentialSpec& potential);

// Full path from the (seed, stream_id) Gaussian increment stream; one
// normal draw per step, so the stream index is the step index.
SemPath sem_trajectory(const SemConfig& config, std::uint64_t stream_id = 0);

// Coarse/fine pair driven by the same Brownian increments: config.dt is the
// fine step, the coarse path uses refine_factor * dt with increments summed
// in blocks of refine_factor.  refine_factor == 1 returns identical paths.
std::pair<SemPath, SemPath> sem_refined_pair(const SemConfig& config, int refine_factor,
                                             std::uint64_t stream_id = 0);

struct ExitSample {
  double time = 0.0;
  bool censored = false;
};

// First grid time with position > ell, detected at grid times only.
// horizon <= 0 selects the default 100 * (kappa*ell + ell^2/2).
ExitSample sem_exit_time(const SemConfig& config, double ell, double horizon = 0.0,
                         std::uint64_t stream_id = 0);

// Ensemble of final positions at t_final, one stream per sample index.
std::vector<double> sem_endpoints(const SemConfig& config, std::size_t n_samples,
                                  unsigned workers = 1);

struct SemMfpt {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::size_t censored = 0;
};

// Mean exit time from [0, ell] over n_samples trajectories; censored runs
// are excluded from the mean and counted.
SemMfpt sem_mfpt(const SemConfig& config, double ell, std::size_t n_samples,
                 unsigned workers = 1, double horizon = 0.0);

}  // namespace sticky
