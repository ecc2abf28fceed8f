// aed/decode.h

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

#ifndef AEDADAPT_AED_DECODE_H_
#define AEDADAPT_AED_DECODE_H_

#include <vector>

#include "aed/model.h"

namespace aedadapt {
namespace aed {

// A decoded token sequence, ending in <eos> or truncated at max_len.
// log_prob is the sum of the chosen tokens' per-step log posteriors.
struct Hypothesis {
  std::vector<int> tokens;
  double log_prob = 0.0;

  bool terminated() const { return !tokens.empty() && tokens.back() == kEos; }
};

// Argmax per step, feeding the chosen token's embedding back. Ties pick
// the lowest token id.
Hypothesis greedy_decode(const AedParams& model, const Tensor& X, int max_len);

// Plain log-probability beam search, no length normalization. Terminal
// hypotheses stay in the beam and compete with live ones; beam_width == 1
// reproduces greedy_decode exactly.
Hypothesis beam_decode(const AedParams& model, const Tensor& X, int beam_width,
                       int max_len);

}  // namespace aed
}  // namespace aedadapt

#endif  // AEDADAPT_AED_DECODE_H_
