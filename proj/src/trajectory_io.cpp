#include "sticky/trajectory_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sticky {

static_assert(std::endian::native == std::endian::little,
              "binary trajectory framing assumes a little-endian host");

namespace {
constexpr char kMagic[4] = {'S', 'R', 'W', '1'};

void put_raw(std::ostream& os, const void* p, std::size_t len) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(len));
}

void get_raw(std::istream& is, void* p, std::size_t len) {
  if (!is.read(static_cast<char*>(p), static_cast<std::streamsize>(len)))
    throw std::runtime_error("read_binary: truncated trajectory stream");
}
}  // namespace

void write_csv(const JumpTrajectory& traj, std::ostream& os) {
  os << "jump_time,state_index\n";
  char buf[40];
  for (std::size_t i = 0; i < traj.jump_times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", traj.jump_times[i]);
    os << buf << ',' << traj.states[i] << '\n';
  }
}

JumpTrajectory read_csv(std::istream& is) {
  JumpTrajectory traj;
  std::string line;
  if (!std::getline(is, line) || line.rfind("jump_time", 0) != 0)
    throw std::runtime_error("read_csv: missing jump_time,state_index header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("read_csv: malformed row: " + line);
    traj.jump_times.push_back(std::stod(line.substr(0, comma)));
    traj.states.push_back(static_cast<std::int32_t>(std::stol(line.substr(comma + 1))));
  }
  traj.t_final = traj.jump_times.empty() ? 0.0 : traj.jump_times.back();
  return traj;
}

void write_binary(const JumpTrajectory& traj, std::ostream& os) {
  put_raw(os, kMagic, sizeof(kMagic));
  const std::uint64_t n = traj.jump_times.size();
  put_raw(os, &n, sizeof(n));
  put_raw(os, &traj.t_final, sizeof(traj.t_final));
  for (std::uint64_t i = 0; i < n; ++i) {
    put_raw(os, &traj.jump_times[i], sizeof(double));
    put_raw(os, &traj.states[i], sizeof(std::int32_t));
  }
}

JumpTrajectory read_binary(std::istream& is) {
  char magic[4];
  get_raw(is, magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("read_binary: bad magic, not a trajectory stream");
  std::uint64_t n = 0;
  JumpTrajectory traj;
  get_raw(is, &n, sizeof(n));
  get_raw(is, &traj.t_final, sizeof(traj.t_final));
  traj.jump_times.resize(n);
  traj.states.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    get_raw(is, &traj.jump_times[i], sizeof(double));
    get_raw(is, &traj.states[i], sizeof(std::int32_t));
  }
  return traj;
}

}  // namespace sticky
