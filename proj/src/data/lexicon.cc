// data/lexicon.cc

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

#include "data/lexicon.h"

#include <set>

#include "common/rng.h"

namespace aedadapt {
namespace data {

namespace {
constexpr int kSosId = 0;
constexpr int kEosId = 1;
}  // namespace

Lexicon::Lexicon(int n_letters, std::vector<std::string> units)
    : n_letters_(n_letters), units_(std::move(units)) {
  AED_CHECK(n_letters_ >= 1 && n_letters_ <= 26,
            "Lexicon: letter count " << n_letters_ << " out of range");
  for (const std::string& u : units_) {
    AED_CHECK(!u.empty(), "Lexicon: empty unit string");
    for (char c : u)
      AED_CHECK(c >= 'a' && c < 'a' + n_letters_,
                "Lexicon: unit '" << u << "' uses letter outside the alphabet");
  }
}

Lexicon Lexicon::generate(int n_units, int n_letters, int min_len, int max_len,
                          uint64_t seed) {
  AED_CHECK(n_units >= 1 && min_len >= 1 && max_len >= min_len,
            "Lexicon::generate: bad unit parameters");
  // Retry with salted seeds until the inventory is collision-free and
  // every letter occurs somewhere; the result is still a pure function of
  // the arguments.
  for (uint64_t salt = 0;; ++salt) {
    Rng rng(derive_seed(seed, "lexicon") + salt);
    std::set<std::string> seen;
    std::vector<std::string> units;
    bool ok = true;
    for (int i = 0; i < n_units && ok; ++i) {
      std::string u;
      for (int attempt = 0; attempt < 64; ++attempt) {
        const int len = rng.uniform_int(min_len, max_len);
        u.clear();
        for (int k = 0; k < len; ++k)
          u.push_back(static_cast<char>('a' + rng.uniform_int(0, n_letters - 1)));
        if (seen.insert(u).second) break;
        u.clear();
      }
      if (u.empty()) ok = false;
      units.push_back(u);
    }
    if (!ok) continue;
    std::set<char> letters;
    for (const std::string& u : units)
      for (char c : u) letters.insert(c);
    if (static_cast<int>(letters.size()) == n_letters)
      return Lexicon(n_letters, std::move(units));
  }
}

const std::string& Lexicon::unit_string(int wsu_id) const {
  AED_CHECK(wsu_id >= 2 && wsu_id < wsu_vocab(),
            "unit_string: id " << wsu_id << " is not a lexical unit");
  return units_[static_cast<size_t>(wsu_id - 2)];
}

int Lexicon::char_id(char letter) const {
  AED_CHECK(letter >= 'a' && letter < 'a' + n_letters_,
            "char_id: '" << letter << "' outside alphabet");
  return 2 + (letter - 'a');
}

std::vector<int> Lexicon::expand(std::span<const int> wsu_ids) const {
  std::vector<int> out;
  bool first = true;
  for (int id : wsu_ids) {
    if (id == kSosId || id == kEosId) continue;
    if (!first) out.push_back(boundary_char());
    first = false;
    for (char c : unit_string(id)) out.push_back(char_id(c));
  }
  out.push_back(kEosId);
  return out;
}

}  // namespace data
}  // namespace aedadapt
