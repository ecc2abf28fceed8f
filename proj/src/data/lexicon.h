// data/lexicon.h

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

#ifndef AEDADAPT_DATA_LEXICON_H_
#define AEDADAPT_DATA_LEXICON_H_

#include <span>
#include <string>
#include <vector>

#include "common/error.h"

namespace aedadapt {
namespace data {

// Word/subword unit inventory over a small letter alphabet, with the
// deterministic unit -> character expansion used for both corpus
// construction and hypothesized character labels.
//
// Unit ids:      0 <sos>, 1 <eos>, 2.. units in rank order (rank 1 is the
//                most frequent under the sampling distribution).
// Character ids: 0 <sos>, 1 <eos>, 2..2+n_letters-1 letters,
//                2+n_letters word boundary.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(int n_letters, std::vector<std::string> units);

  // Random inventory of distinct units (1..max_len letters each) in which
  // every letter of the alphabet occurs at least once.
  static Lexicon generate(int n_units, int n_letters, int min_len, int max_len,
                          uint64_t seed);

  int n_letters() const { return n_letters_; }
  int n_units() const { return static_cast<int>(units_.size()); }
  int wsu_vocab() const { return 2 + n_units(); }
  int char_vocab() const { return 3 + n_letters_; }
  int boundary_char() const { return 2 + n_letters_; }

  const std::vector<std::string>& units() const { return units_; }
  const std::string& unit_string(int wsu_id) const;
  int char_id(char letter) const;

  // Expands a unit-id sequence into character ids: letters of each unit,
  // units joined by the boundary symbol, terminated with <eos>. <sos> and
  // <eos> in the input are skipped.
  std::vector<int> expand(std::span<const int> wsu_ids) const;

 private:
  int n_letters_ = 0;
  std::vector<std::string> units_;
};

}  // namespace data
}  // namespace aedadapt

#endif  // AEDADAPT_DATA_LEXICON_H_
