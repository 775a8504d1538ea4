#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace pearsonsde {

// Counter-based stream built on 64-bit finalizer hashes. Draw i of a stream
// depends only on (key, i), and keys are derived from (seed, path ids), so
// replication streams are independent of evaluation order and thread count.
class CounterRng {
 public:
  CounterRng() = default;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
  }

  static CounterRng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    CounterRng r;
    r.key_ = mix(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t id : path) r.key_ = mix(r.key_ ^ mix(id + 0xd1b54a32d192ed03ULL));
    return r;
  }

  std::uint64_t next_u64() {
    ++counter_;
    return mix(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform on (0, 1).
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  double next_gaussian() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace pearsonsde
