#pragma once

#include <array>
#include <cstdint>

namespace sticky {

// Philox4x64-10 counter-based generator.  A block of four 64-bit words is a
// pure function of (key, counter), so the stream belonging to one trajectory
// or Monte Carlo sample can be generated independently of every other
// stream and of worker scheduling.
struct PhiloxState {
  std::array<std::uint64_t, 4> counter{};
  std::array<std::uint64_t, 2> key{};
};

std::array<std::uint64_t, 4> philox4x64(const PhiloxState& state);

// Sequential view of one Philox stream.  key = (seed, stream_id); the
// 256-bit counter runs over blocks, so every draw is a deterministic
// function of (seed, stream_id, draw index).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  // Uniform draw strictly inside (0, 1); safe to hand to std::log.
  double uniform();

  // Standard normal via Box-Muller (cosine branch); consumes two uniforms.
  double gauss();

  // Exponential waiting time by inversion: -log(u) / rate.
  double exponential(double rate);

  std::uint64_t seed() const { return state_.key[0]; }
  std::uint64_t stream_id() const { return state_.key[1]; }

 private:
  void refill();

  PhiloxState state_{};
  std::array<std::uint64_t, 4> block_{};
  int next_ = 4;  // next unread word in block_
};

}  // namespace sticky
