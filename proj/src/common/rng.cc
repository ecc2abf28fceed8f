// common/rng.cc

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

#include "common/rng.h"

#include <cmath>
#include <sstream>

#include "common/error.h"

namespace aedadapt {

double Rng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  // Box-Muller on (0,1] x [0,1).
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  cached_ = r * std::sin(theta);
  have_cached_ = true;
  return r * std::cos(theta);
}

int Rng::uniform_int(int lo, int hi) {
  AED_CHECK(lo <= hi, "uniform_int: empty range [" << lo << ", " << hi << "]");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

std::string Rng::state() const {
  std::ostringstream os;
  os << eng_ << " " << (have_cached_ ? 1 : 0);
  if (have_cached_) {
    os.precision(17);
    os << " " << cached_;
  }
  return os.str();
}

void Rng::set_state(const std::string& s) {
  std::istringstream is(s);
  int cached_flag = 0;
  is >> eng_ >> cached_flag;
  AED_CHECK(!is.fail(), "Rng::set_state: malformed state string");
  have_cached_ = cached_flag != 0;
  cached_ = 0.0;
  if (have_cached_) is >> cached_;
}

namespace {
uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

uint64_t derive_seed(uint64_t master, std::string_view tag) {
  uint64_t h = fnv1a64(tag.data(), tag.size());
  return splitmix64(master ^ h);
}

uint64_t fnv1a64(const void* data, size_t n) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace aedadapt
