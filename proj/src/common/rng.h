// common/rng.h

// Copyright 2026 The aedadapt Authors
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

#ifndef AEDADAPT_COMMON_RNG_H_
#define AEDADAPT_COMMON_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace aedadapt {

// Seeded random source. Real-valued draws are derived from the raw 64-bit
// stream by hand (not via std::*_distribution) so that every sequence is
// bit-reproducible across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [lo, hi).
  double uniform(double lo = 0.0, double hi = 1.0) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

  // Engine + cache state as text, for checkpointing.
  std::string state() const;
  void set_state(const std::string& s);

 private:
  std::mt19937_64 eng_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// Splits a master seed into named substreams so that consumers (data order,
// parameter init, ...) cannot perturb each other's draws.
uint64_t derive_seed(uint64_t master, std::string_view tag);

// FNV-1a over raw bytes; used for byte-level identity checks.
uint64_t fnv1a64(const void* data, size_t n);

}  // namespace aedadapt

#endif  // AEDADAPT_COMMON_RNG_H_
