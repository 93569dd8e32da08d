// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_RNG_HPP
#define AMBTAG_RNG_HPP

#include <cstdint>
#include <random>

namespace ambtag {

// Deterministic uniform generator. std::uniform_real_distribution is
// implementation-defined, so doubles are built from raw mt19937_64 words to
// keep seeded sequences bitwise reproducible on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ambtag

#endif
