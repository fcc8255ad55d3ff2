#pragma once

// Seeded RNG streams. Batch sample i uses a stream derived from
// (master seed, i) so parallel runs are bitwise reproducible.

#include <cmath>
#include <cstdint>
#include <random>

namespace schur {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream derived(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0xd1342543de82ef95ULL * (index + 1);
    std::uint64_t b = splitmix64(s);
    return RngStream(a ^ b);
  }

  // Uniform on (0,1]; never returns 0 (safe under log()).
  double uniform_pos() { return 1.0 - std::ldexp(double(engine_() >> 11), -53); }

  // Uniform on [0,1).
  double uniform() { return std::ldexp(double(engine_() >> 11), -53); }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace schur
