#pragma once

#include <cstdint>
#include <random>

namespace rggcross {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic random stream. Wraps mt19937_64 but owns its own
/// uniform/normal/Poisson transforms so that identical seeds give
/// identical output on every platform and standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream derived from (master_seed, replication_index, stream_tag).
  /// Independent replications get well-separated seeds, so results do
  /// not depend on the order in which replications are executed.
  static RngStream derive(std::uint64_t master_seed, std::uint64_t replication,
                          std::uint64_t tag = 0) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0x2545f4914f6cdd1dULL * (replication + 1);
    std::uint64_t b = splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (tag + 1);
    std::uint64_t c = splitmix64(s);
    return RngStream(a ^ (b << 1) ^ (c << 2) ^ splitmix64(s));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [0, 1 - 2^-53], never exactly zero.
  double uniform_pos() {
    double u;
    do {
      u = uniform();
    } while (u == 0.0);
    return u;
  }

  /// Standard normal via Marsaglia's polar method.
  double normal();

  /// Exact Poisson sample; inversion for small means, PTRS for large.
  long long poisson(double mean);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rggcross
