#pragma once

#include <cstdint>
#include <random>

namespace vglab {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the stream for sample `index` under `master`; streams for different
// indices are independent of the order they are drawn in.
inline uint64_t stream_seed(uint64_t master, uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

class Rng {
 public:
  using result_type = uint64_t;
  explicit Rng(uint64_t seed = 0) : eng_(splitmix64(seed)) {}
  Rng(uint64_t master, uint64_t index) : eng_(stream_seed(master, index)) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return eng_(); }

  // Uniform in [0, n); n must be positive.
  uint64_t below(uint64_t n) { return std::uniform_int_distribution<uint64_t>(0, n - 1)(eng_); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  Rng split() { return Rng(eng_()); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vglab
