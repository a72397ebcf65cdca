#pragma once

#include <cstdint>
#include <random>

#include "maxcyl/types.hpp"

namespace maxcyl {

/// Seeded random source with a fixed, library-independent contract:
///   engine    std::mt19937_64 seeded with the 64-bit seed
///   uniform() (next() >> 11) * 2^-53, in [0, 1)
///   integer(lo, hi) lo + next() % (hi - lo + 1)
/// Standard-library distributions are deliberately not used because their
/// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }
  // Draws are sequenced explicitly: argument evaluation order is unspecified.
  cplx complex_uniform(double scale = 1.0) {
    const double re = uniform(-scale, scale);
    const double im = uniform(-scale, scale);
    return cplx(re, im);
  }
  CVec3 complex_vector(double scale = 1.0) {
    CVec3 v;
    for (int i = 0; i < 3; ++i) v[i] = complex_uniform(scale);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace maxcyl
