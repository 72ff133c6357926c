#pragma once
// Splittable counter-based generator. Every draw is a pure function of
// (seed, stream, counter), so trials replay exactly regardless of worker
// scheduling. SplitMix64 finalizer; statistically fine for Monte Carlo.

#include <cstdint>

namespace tqdsim {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Rng {
 public:
  Rng(uint64_t seed, uint64_t stream = 0)
      : state_(splitmix64(seed ^ splitmix64(stream * 0x9e3779b97f4a7c15ull + 1))) {}

  // Child generator for an independent substream (e.g. one per trial).
  Rng split(uint64_t stream) const { return Rng(state_, stream + 1); }

  uint64_t next_u64() { return splitmix64(state_ + (++ctr_) * 0x9e3779b97f4a7c15ull); }
  // uniform in [0, 1)
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return next_double() < p; }
  bool bit() { return next_u64() & 1; }
  uint64_t below(uint64_t n) { return next_u64() % n; }

 private:
  uint64_t state_;
  uint64_t ctr_ = 0;
};

}  // namespace tqdsim
