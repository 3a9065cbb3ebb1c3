#include "sticky/srw.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sticky {

std::size_t JumpTrajectory::interval_index(double t) const {
  if (t < 0.0 || t > t_final)
    throw std::invalid_argument("JumpTrajectory: time outside [0, t_final]");
  // Last arrival time <= t; right-continuity puts t == jump_times[i] in
  // interval i.
  const auto it = std::upper_bound(jump_times.begin(), jump_times.end(), t);
  return static_cast<std::size_t>(it - jump_times.begin()) - 1;
}

namespace {

template <class Generator>
JumpTrajectory collect(const Generator& gen, std::int64_t x0, double t_final,
                       RandomStream& rs) {
  if (!(t_final > 0.0)) throw std::invalid_argument("simulate: t_final must be > 0");
  JumpTrajectory traj;
  traj.t_final = t_final;
  traj.jump_times.push_back(0.0);
  traj.states.push_back(static_cast<std::int32_t>(x0));
  run_ssa(gen, x0, t_final, rs,
          [&](std::int64_t /*state*/, double /*t_enter*/, double t_leave, std::int64_t next) {
            traj.jump_times.push_back(t_leave);
            traj.states.push_back(static_cast<std::int32_t>(next));
            return true;
          });
  return traj;
}

}  // namespace

JumpTrajectory simulate(const SrwGenerator& gen, std::int64_t x0, double t_final,
                        RandomStream& rs) {
  return collect(gen, x0, t_final, rs);
}

JumpTrajectory simulate(const SrwGenerator& gen, std::int64_t x0, double t_final,
                        std::uint64_t seed, std::uint64_t stream_id) {
  RandomStream rs(seed, stream_id);
  return collect(gen, x0, t_final, rs);
}

JumpTrajectory simulate_segment(const SegmentGenerator& gen, std::int64_t x0, double t_final,
                                RandomStream& rs) {
  return collect(gen, x0, t_final, rs);
}

JumpTrajectory simulate_segment(const SegmentGenerator& gen, std::int64_t x0, double t_final,
                                std::uint64_t seed, std::uint64_t stream_id) {
  RandomStream rs(seed, stream_id);
  return collect(gen, x0, t_final, rs);
}

JumpTrajectory rescale_kappa(const JumpTrajectory& traj, const SrwGenerator& gen_old,
                             double kappa_new) {
  if (!(kappa_new >= 0.0)) throw std::invalid_argument("rescale_kappa: kappa_new must be >= 0");
  const double h = gen_old.grid.h;
  const double ratio =
      (kappa_new * h + 0.5 * h * h) / (gen_old.kappa * h + 0.5 * h * h);

  JumpTrajectory out;
  out.states = traj.states;
  out.jump_times.resize(traj.jump_times.size());
  double t = 0.0;
  out.jump_times[0] = 0.0;
  for (std::size_t i = 0; i + 1 < traj.jump_times.size(); ++i) {
    double dwell = traj.jump_times[i + 1] - traj.jump_times[i];
    if (traj.states[i] == 0) dwell *= ratio;
    t += dwell;
    out.jump_times[i + 1] = t;
  }
  out.t_final = traj.jump_times.empty() ? traj.t_final
                                        : std::min(traj.t_final, out.jump_times.back());
  return out;
}

JumpTrajectory amir_walk(int n, double t_final, std::uint64_t seed, std::uint64_t stream_id) {
  if (n < 1 || n > 24) throw std::invalid_argument("amir_walk: n must lie in [1, 24]");
  if (!(t_final > 0.0)) throw std::invalid_argument("amir_walk: t_final must be > 0");
  const double dt = std::ldexp(1.0, -2 * n);       // 2^-2n between interior steps
  const double wait0 = std::ldexp(1.0, -n);        // sqrt(dt) spent at each visit to 0
  RandomStream rs(seed, stream_id);

  JumpTrajectory traj;
  traj.t_final = t_final;
  const double est = t_final / dt + t_final / wait0 + 16.0;
  traj.jump_times.reserve(static_cast<std::size_t>(est));
  traj.states.reserve(static_cast<std::size_t>(est));

  std::int64_t s = 0;  // signed walk; the emitted state is |s|
  double t = 0.0;
  traj.jump_times.push_back(0.0);
  traj.states.push_back(0);
  while (true) {
    t += (s == 0) ? wait0 : dt;
    s += (rs.uniform() < 0.5) ? -1 : 1;
    traj.jump_times.push_back(t);
    traj.states.push_back(static_cast<std::int32_t>(s < 0 ? -s : s));
    if (t > t_final) return traj;
  }
}

}  // namespace sticky
