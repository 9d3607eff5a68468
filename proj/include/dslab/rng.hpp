#ifndef DSLAB_RNG_HPP
#define DSLAB_RNG_HPP

#include <cstdint>

namespace dslab {

// splitmix64; used to derive independent per-sample streams from (seed, index)
// so results do not depend on execution order.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x517cc1b727220a95ULL * (index + 1)));
  mix.next();
  mix.next();
  return mix;
}

}  // namespace dslab

#endif
