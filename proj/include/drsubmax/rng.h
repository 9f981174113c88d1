// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random numbers with a portable, documented derivation:
//
//   * engine: std::mt19937_64 (output sequence fixed by the C++ standard);
//   * uniform doubles: top 53 bits of one engine draw times 2^-53, in [0,1);
//   * integers in [0,n): rejection sampling on the raw 64-bit draw;
//   * sub-seeds: SplitMix64(seed XOR FNV-1a-64(label)).
//
// std::*_distribution is avoided on purpose: its output is not specified
// across standard library implementations.

#ifndef DRSUBMAX_RNG_H_
#define DRSUBMAX_RNG_H_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string_view>
#include <vector>

namespace drsubmax {

inline std::uint64_t SplitMix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t Fnv1a64(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed of the component named `label` under experiment seed `seed`.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label) {
  return SplitMix64(seed ^ Fnv1a64(label));
}

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label,
                                std::uint64_t index) {
  return SplitMix64(DeriveSeed(seed, label) ^ SplitMix64(index));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Exponential with rate `lambda` by inverse CDF.
  double Exponential(double lambda) {
    return -std::log1p(-Uniform()) / lambda;
  }

  // Uniform integer in [0, n); n > 0.
  std::uint64_t Index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  // Uniformly random permutation of 0..n-1 (Fisher-Yates).
  std::vector<int> Permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(Index(static_cast<std::uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

  // Uniform weights on the probability simplex (Dirichlet(1,...,1)).
  std::vector<double> SimplexWeights(int n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (double& v : w) {
      v = Exponential(1.0);
      total += v;
    }
    for (double& v : w) v /= total;
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace drsubmax

#endif  // DRSUBMAX_RNG_H_
