// autodiff/gradcheck.cc

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

#include "autodiff/gradcheck.h"

#include <algorithm>
#include <cmath>

#include "common/rng.h"

namespace aedadapt {

double finite_diff_check(const LossFn& loss_fn,
                         const std::vector<Parameter*>& params,
                         const FdCheckOptions& opts) {
  AED_CHECK(opts.epsilon > 0.0,
            "finite_diff_check: epsilon must be positive, got " << opts.epsilon);

  for (Parameter* p : params) p->zero_grad();
  const double base = loss_fn(true);
  const double replay = loss_fn(false);
  if (!(base == replay)) {
    AED_THROW(ErrorKind::kVerify,
              "finite_diff_check: loss_fn is not deterministic ("
                  << base << " vs " << replay << ")");
  }

  Rng rng(opts.seed);
  double max_rel = 0.0;
  for (Parameter* p : params) {
    const int64_t n = p->value.size();
    std::vector<int64_t> coords;
    if (n <= opts.max_coords_per_param) {
      for (int64_t i = 0; i < n; ++i) coords.push_back(i);
    } else {
      for (int k = 0; k < opts.max_coords_per_param; ++k)
        coords.push_back(static_cast<int64_t>(rng.next_u64() % static_cast<uint64_t>(n)));
    }
    for (int64_t i : coords) {
      const double orig = p->value[i];
      p->value[i] = orig + opts.epsilon;
      const double lp = loss_fn(false);
      p->value[i] = orig - opts.epsilon;
      const double lm = loss_fn(false);
      p->value[i] = orig;
      const double central = (lp - lm) / (2.0 * opts.epsilon);
      const double analytic = p->grad[i];
      const double denom =
          std::max({std::fabs(analytic), std::fabs(central), 1e-12});
      max_rel = std::max(max_rel, std::fabs(analytic - central) / denom);
    }
  }
  return max_rel;
}

}  // namespace aedadapt
