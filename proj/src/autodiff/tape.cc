// autodiff/tape.cc

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

#include "autodiff/tape.h"

namespace aedadapt {

void Tape::backward(Var loss) {
  AED_CHECK(loss.defined(), "backward: undefined loss");
  AED_CHECK(loss.node()->tape == this, "backward: loss from another tape");
  AED_CHECK(loss.value().size() == 1,
            "backward: loss must be scalar, got "
                << shape_str(loss.value().shape()));
  AED_CHECK(!backward_ran_,
            "backward: already ran on this tape; record new operations first");

  grad_buf(*loss.node()).fill(1.0);

  // Reverse recording order. Nodes never reached from the loss keep no
  // gradient, so unreachable parameters end up with exact zeros.
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    Node& n = *it;
    if (!n.has_grad) continue;
    if (n.adjoint) n.adjoint(n);
    if (n.sink != nullptr) n.sink->grad.add_(n.grad);
  }
  backward_ran_ = true;
}

}  // namespace aedadapt
