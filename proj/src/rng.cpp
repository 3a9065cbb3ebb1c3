#include "sticky/rng.hpp"

#include <cmath>

namespace sticky {

namespace {

// Round multipliers and Weyl key increments of Philox4x64.
constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  return static_cast<std::uint64_t>(p);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const PhiloxState& state) {
  std::array<std::uint64_t, 4> x = state.counter;
  std::uint64_t k0 = state.key[0];
  std::uint64_t k1 = state.key[1];
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, hi1;
    const std::uint64_t lo0 = mulhilo(kMul0, x[0], hi0);
    const std::uint64_t lo1 = mulhilo(kMul1, x[2], hi1);
    x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return x;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id) {
  state_.key = {seed, stream_id};
}

void RandomStream::refill() {
  block_ = philox4x64(state_);
  next_ = 0;
  for (auto& word : state_.counter) {  // 256-bit counter increment
    if (++word != 0) break;
  }
}

double RandomStream::uniform() {
  if (next_ == 4) refill();
  const std::uint64_t r = block_[static_cast<std::size_t>(next_++)];
  // (r + 1/2) * 2^-64 lies strictly inside (0, 1).
  return (static_cast<double>(r) + 0.5) * 0x1p-64;
}

double RandomStream::gauss() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RandomStream::exponential(double rate) {
  return -std::log(uniform()) / rate;
}

}  // namespace sticky
