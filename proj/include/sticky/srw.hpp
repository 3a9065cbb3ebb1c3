#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sticky/rng.hpp"

namespace sticky {

// Uniform half-line grid {0, h, 2h, ...}; states are integer indices, never
// floating positions, so nearest-neighbor structure is exact.
struct Grid {
  double h = 0.1;
};

// Standard divides every jump rate by 2 (the numerical generator of a
// standard, rather than root-2, sticky Brownian motion).
enum class RateScale { Root2, Standard };

// Nearest-neighbor jump rates on the half-line with a sticky origin:
// interior exit rate 2/h^2 split evenly between neighbors, origin exit rate
// 2/(h^2 + 2 kappa h) always toward state 1.
struct SrwGenerator {
  Grid grid;
  double kappa = 0.0;
  RateScale scale = RateScale::Root2;
  std::int64_t max_index = 1'000'000'000;  // soft cap against runaway walks
};

// Two-sided sticky segment [0, L] with L = n_cells * h; the right boundary
// mirrors the origin row with the flux sign reversed.
struct SegmentGenerator {
  Grid grid;
  double kappa_left = 0.0;
  double kappa_right = 0.0;
  std::int64_t n_cells = 1;
  RateScale scale = RateScale::Root2;

  double length() const { return static_cast<double>(n_cells) * grid.h; }
};

struct GeneratorRow {
  double exit_rate = 0.0;  // -Q_kk
  double prob_down = 0.0;  // jump to k - 1
  double prob_up = 0.0;    // jump to k + 1
};

inline double rate_factor(RateScale scale) {
  return scale == RateScale::Root2 ? 1.0 : 0.5;
}

inline GeneratorRow generator_row(const SrwGenerator& gen, std::int64_t k) {
  if (k < 0) throw std::out_of_range("generator_row: negative state");
  const double h = gen.grid.h;
  const double f = rate_factor(gen.scale);
  if (k == 0) return {f * 2.0 / (h * h + 2.0 * gen.kappa * h), 0.0, 1.0};
  return {f * 2.0 / (h * h), 0.5, 0.5};
}

inline GeneratorRow generator_row(const SegmentGenerator& gen, std::int64_t k) {
  if (k < 0 || k > gen.n_cells) throw std::out_of_range("generator_row: state outside segment");
  const double h = gen.grid.h;
  const double f = rate_factor(gen.scale);
  if (k == 0) return {f * 2.0 / (h * h + 2.0 * gen.kappa_left * h), 0.0, 1.0};
  if (k == gen.n_cells) return {f * 2.0 / (h * h + 2.0 * gen.kappa_right * h), 1.0, 0.0};
  return {f * 2.0 / (h * h), 0.5, 0.5};
}

// h^2/2 at interior points, kappa h + h^2/2 at a sticky boundary (doubled
// under RateScale::Standard).
inline double mean_holding_time(const SrwGenerator& gen, std::int64_t k) {
  return 1.0 / generator_row(gen, k).exit_rate;
}

inline double mean_holding_time(const SegmentGenerator& gen, std::int64_t k) {
  return 1.0 / generator_row(gen, k).exit_rate;
}

// Piecewise-constant right-continuous jump path: states[i] is occupied on
// [jump_times[i], jump_times[i+1]).  Simulation appends the first arrival
// beyond t_final and then stops, so the last state begins after t_final and
// time integrals clip there.
struct JumpTrajectory {
  std::vector<double> jump_times;    // arrival times, jump_times[0] == 0
  std::vector<std::int32_t> states;  // grid indices, same length
  double t_final = 0.0;

  // Index i with t in [jump_times[i], jump_times[i+1]); requires t >= 0 and
  // t <= t_final <= coverage.
  std::size_t interval_index(double t) const;
  std::int32_t state_at(double t) const { return states[interval_index(t)]; }
};

// Exact SSA sampling.  Each event consumes one uniform for the direction and
// one for the exponential holding time (inverse CDF), in that order; the
// direction draw is consumed at boundary states too, so streams stay in
// lockstep across kappa values and the holding-time coupling of
// rescale_kappa is exact.
//
// The visitor receives every holding interval as
//   visit(state, t_enter, t_leave, next_state) -> bool
// where next_state is the state entered at t_leave; return false to stop.
// The final interval delivered has t_leave > t_final.
template <class Generator, class Visitor>
void run_ssa(const Generator& gen, std::int64_t x0, double t_final, RandomStream& rs,
             Visitor&& visit) {
  std::int64_t k = x0;
  double t = 0.0;
  (void)generator_row(gen, x0);  // validates x0
  while (true) {
    const GeneratorRow row = generator_row(gen, k);
    const double u_dir = rs.uniform();
    const double dwell = rs.exponential(row.exit_rate);
    const std::int64_t next = (u_dir < row.prob_down) ? k - 1 : k + 1;
    const double t_next = t + dwell;
    if (!visit(k, t, t_next, next)) return;
    if (t_next > t_final) return;
    if constexpr (requires { gen.max_index; }) {
      if (next > gen.max_index)
        throw std::runtime_error("run_ssa: walk exceeded max_index = " +
                                 std::to_string(gen.max_index));
    }
    k = next;
    t = t_next;
  }
}

JumpTrajectory simulate(const SrwGenerator& gen, std::int64_t x0, double t_final,
                        RandomStream& rs);
JumpTrajectory simulate(const SrwGenerator& gen, std::int64_t x0, double t_final,
                        std::uint64_t seed, std::uint64_t stream_id = 0);

JumpTrajectory simulate_segment(const SegmentGenerator& gen, std::int64_t x0, double t_final,
                                RandomStream& rs);
JumpTrajectory simulate_segment(const SegmentGenerator& gen, std::int64_t x0, double t_final,
                                std::uint64_t seed, std::uint64_t stream_id = 0);

// Same state sequence; every holding interval at state 0 is multiplied by
// (kappa_new h + h^2/2) / (kappa_old h + h^2/2) and jump times are
// re-accumulated.  If kappa_new < kappa_old the rescaled events may no
// longer cover [0, t_final]; t_final shrinks to the covered horizon then.
JumpTrajectory rescale_kappa(const JumpTrajectory& traj, const SrwGenerator& gen_old,
                             double kappa_new);

// Reflected rescaled simple random walk with dx = 2^-n, dt = 2^-2n and a
// deterministic (not exponential) waiting time sqrt(dt) = 2^-n inserted at
// every visit to the origin, encoded on the grid h = 2^-n.
JumpTrajectory amir_walk(int n, double t_final, std::uint64_t seed,
                         std::uint64_t stream_id = 0);

}  // namespace sticky
