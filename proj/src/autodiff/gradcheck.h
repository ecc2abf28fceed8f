// autodiff/gradcheck.h

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

#ifndef AEDADAPT_AUTODIFF_GRADCHECK_H_
#define AEDADAPT_AUTODIFF_GRADCHECK_H_

#include <functional>
#include <vector>

#include "autodiff/tape.h"

namespace aedadapt {

struct FdCheckOptions {
  double epsilon = 1e-5;
  // Coordinates checked per parameter tensor; tensors at most this large
  // are swept fully, larger ones are subsampled deterministically.
  int max_coords_per_param = 8;
  uint64_t seed = 0x5eedc0de;
};

// A loss evaluation under the current parameter values. When with_grad is
// true the evaluation must also run backward, accumulating into the
// parameters' grad buffers (which arrive zeroed).
using LossFn = std::function<double(bool with_grad)>;

// Central-difference verification oracle. Returns the maximum over sampled
// coordinates of
//   |analytic - central| / max(|analytic|, |central|, 1e-12).
// The loss must be deterministic: two evaluations at the same point must
// agree bitwise, otherwise the oracle itself is invalid and an error of
// kind kVerify is raised. epsilon must be positive.
double finite_diff_check(const LossFn& loss_fn,
                         const std::vector<Parameter*>& params,
                         const FdCheckOptions& opts = {});

}  // namespace aedadapt

#endif  // AEDADAPT_AUTODIFF_GRADCHECK_H_
