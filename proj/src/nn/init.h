// nn/init.h

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

#ifndef AEDADAPT_NN_INIT_H_
#define AEDADAPT_NN_INIT_H_

#include "autodiff/tape.h"
#include "common/rng.h"

namespace aedadapt {
namespace nn {

// Weights are drawn uniform(-scale, scale), biases stay zero. Callers
// initialize parameters in a fixed declaration order so a given seed
// always produces the same model.
inline void init_uniform(Parameter& p, Rng& rng, double scale) {
  for (int64_t i = 0; i < p.value.size(); ++i)
    p.value[i] = rng.uniform(-scale, scale);
}

}  // namespace nn
}  // namespace aedadapt

#endif  // AEDADAPT_NN_INIT_H_
