#pragma once

#include <iosfwd>

#include "sticky/srw.hpp"

namespace sticky {

// CSV: header "jump_time,state_index", one row per event, %.17g times
// (round-trip exact).
void write_csv(const JumpTrajectory& traj, std::ostream& os);
JumpTrajectory read_csv(std::istream& is);

// Compact little-endian framing for large ensembles: magic "SRW1",
// u64 event count, f64 t_final, then per event f64 jump time + i32 state.
void write_binary(const JumpTrajectory& traj, std::ostream& os);
JumpTrajectory read_binary(std::istream& is);

}  // namespace sticky
