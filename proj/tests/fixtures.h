// tests/fixtures.h

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

#ifndef AEDADAPT_TESTS_FIXTURES_H_
#define AEDADAPT_TESTS_FIXTURES_H_

#include <vector>

#include "aed/model.h"
#include "testing.h"

namespace aedadapt {
namespace testing {

inline aed::ModelDims toy_dims(int vocab = 6) {
  aed::ModelDims d;
  d.feat_dim = 3;
  d.enc_layers = 1;
  d.enc_width = 4;
  d.d_model = 4;
  d.d_att = 3;
  d.dec_layers = 2;
  d.vocab = vocab;
  // Training uses a smaller scale; verification fixtures need gradients
  // well above the central-difference noise floor (~1e-10 at eps 1e-5).
  d.init_scale = 0.5;
  return d;
}

inline aed::AedParams toy_model(uint64_t seed = 99, int vocab = 6) {
  aed::AedParams m(toy_dims(vocab));
  m.init(seed);
  return m;
}

// Random stacked-frame input of length T.
inline Tensor toy_input(Rng& rng, int T, int feat_dim = 3) {
  return random_tensor(rng, {T, feat_dim}, -1.0, 1.0);
}

// Random label sequence of the given length, ending in <eos>.
inline std::vector<int> toy_labels(Rng& rng, int len, int vocab) {
  std::vector<int> y;
  for (int i = 0; i + 1 < len; ++i) y.push_back(rng.uniform_int(2, vocab - 1));
  y.push_back(aed::kEos);
  return y;
}

}  // namespace testing
}  // namespace aedadapt

#endif  // AEDADAPT_TESTS_FIXTURES_H_
