// nn/sgd.h

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

#ifndef AEDADAPT_NN_SGD_H_
#define AEDADAPT_NN_SGD_H_

#include <cmath>
#include <vector>

#include "autodiff/tape.h"

namespace aedadapt {
namespace nn {

inline void zero_grads(const std::vector<Parameter*>& ps) {
  for (Parameter* p : ps) p->zero_grad();
}

inline double grad_norm(const std::vector<Parameter*>& ps) {
  double sq = 0.0;
  for (const Parameter* p : ps)
    for (int64_t i = 0; i < p->grad.size(); ++i) sq += p->grad[i] * p->grad[i];
  return std::sqrt(sq);
}

// Plain gradient-descent step over accumulated gradients:
//   p -= lr * scale * g      (scale is typically 1 / batch size)
// clip > 0 rescales by clip / ||g|| when the global norm exceeds clip;
// clip == 0 disables clipping, which keeps single-step updates exactly
// p - lr * g and lets oracles reproduce them.
inline void sgd_step(const std::vector<Parameter*>& ps, double lr, double scale,
                     double clip = 0.0) {
  double factor = lr * scale;
  if (clip > 0.0) {
    const double gn = grad_norm(ps) * scale;
    if (gn > clip) factor *= clip / gn;
  }
  for (Parameter* p : ps) {
    for (int64_t i = 0; i < p->value.size(); ++i)
      p->value[i] -= factor * p->grad[i];
    p->zero_grad();
  }
}

}  // namespace nn
}  // namespace aedadapt

#endif  // AEDADAPT_NN_SGD_H_
