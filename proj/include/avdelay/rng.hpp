#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace avdelay {

// Splittable counter-style seed derivation. Child streams are identified by a
// path of ids hashed into the master seed, e.g.
//   derive_seed(master, {stream::kEventTime, unit, arm})
// so any unit/arm/replication stream can be opened independently of execution
// order. This is what makes parallel and serial runs bit-identical.
namespace stream {
inline constexpr std::uint64_t kEntryTime = 1;
inline constexpr std::uint64_t kEventTime = 2;
inline constexpr std::uint64_t kOutcomeNoise = 3;
inline constexpr std::uint64_t kAssignment = 4;
inline constexpr std::uint64_t kReplication = 5;
}  // namespace stream

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(master);
  for (std::uint64_t id : path) {
    s = splitmix64(s ^ (0x9E3779B97F4A7C15ULL * (id + 1)));
  }
  return s;
}

// Deterministic uniform source. All mappings from raw bits to variates are
// spelled out here instead of using std::*_distribution, whose output is
// implementation-defined and would break digest-stable reruns.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  // 53-bit uniform on [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Inversion; strictly positive.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace avdelay
