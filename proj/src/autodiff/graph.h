// autodiff/graph.h

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

#ifndef AEDADAPT_AUTODIFF_GRAPH_H_
#define AEDADAPT_AUTODIFF_GRAPH_H_

#include <unordered_map>
#include <vector>

#include "autodiff/tape.h"

namespace aedadapt {

// The set of parameters that are trainable in a pass. Everything not
// marked here is bound as a constant, so frozen parameters can neither
// receive gradients nor be touched by an optimizer step.
class ParamBind {
 public:
  ParamBind() = default;

  void mark(Parameter& p) {
    if (map_.emplace(&p, &p).second) order_.push_back(&p);
  }
  void mark_all(const std::vector<Parameter*>& ps) {
    for (Parameter* p : ps) mark(*p);
  }

  Parameter* find(const Parameter& p) const {
    auto it = map_.find(&p);
    return it == map_.end() ? nullptr : it->second;
  }

  // Insertion order; this is the documented deterministic order used for
  // optimizer steps and gradient checks.
  const std::vector<Parameter*>& trainable() const { return order_; }

 private:
  std::vector<Parameter*> order_;
  std::unordered_map<const Parameter*, Parameter*> map_;
};

// Binds parameters onto a tape, once each, according to a ParamBind.
// A null bind means everything is frozen (pure evaluation).
class Graph {
 public:
  Graph(Tape& tape, const ParamBind* bind) : tape_(&tape), bind_(bind) {}

  Var operator()(const Parameter& p) {
    auto it = cache_.find(&p);
    if (it != cache_.end()) return it->second;
    Parameter* trainable = bind_ ? bind_->find(p) : nullptr;
    Var v = trainable ? tape_->param(*trainable, true)
                      : tape_->constant(p.value);
    cache_.emplace(&p, v);
    return v;
  }

  Var constant(Tensor v) { return tape_->constant(std::move(v)); }

  Tape& tape() { return *tape_; }

 private:
  Tape* tape_;
  const ParamBind* bind_;
  std::unordered_map<const Parameter*, Var> cache_;
};

}  // namespace aedadapt

#endif  // AEDADAPT_AUTODIFF_GRAPH_H_
