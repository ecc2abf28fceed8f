// autodiff/tape.h

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

#ifndef AEDADAPT_AUTODIFF_TAPE_H_
#define AEDADAPT_AUTODIFF_TAPE_H_

#include <deque>
#include <functional>
#include <string>
#include <utility>

#include "autodiff/tensor.h"

namespace aedadapt {

// A named trainable tensor. `grad` always has the shape of `value`;
// backward passes accumulate into it and the optimizer consumes it.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;

  Parameter(std::string n, Tensor v)
      : name(std::move(n)), value(std::move(v)), grad(value.shape()) {}

  void zero_grad() { grad.fill(0.0); }
};

class Tape;

// One recorded operation result. Adjoint closures capture their input
// nodes; nodes are owned by the tape and addresses are stable.
struct Node {
  Tape* tape = nullptr;
  Tensor value;
  Tensor grad;             // allocated lazily during backward
  bool needs_grad = false;
  bool has_grad = false;
  Parameter* sink = nullptr;  // trainable leaf: flush grad here
  std::function<void(Node&)> adjoint;
};

// Non-owning handle to a tape node.
class Var {
 public:
  Var() = default;
  explicit Var(Node* n) : n_(n) {}

  bool defined() const { return n_ != nullptr; }
  const Tensor& value() const { return n_->value; }
  bool needs_grad() const { return n_->needs_grad; }

  // Gradient after backward(); zero tensor if this node was unreachable
  // from the loss.
  Tensor grad() const {
    return n_->has_grad ? n_->grad : Tensor::zeros(n_->value.shape());
  }

  Node* node() const { return n_; }

 private:
  Node* n_ = nullptr;
};

// Define-by-run record of primitive operations. A tape and its nodes are
// confined to one worker; backward visits nodes in exact reverse order of
// recording, which is a reverse topological order by construction.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value) { return push(std::move(value), false, nullptr); }

  // Gradient-carrying leaf with no external sink (tests, probes).
  Var leaf(Tensor value) { return push(std::move(value), true, nullptr); }

  // Binds a parameter onto the tape. A trainable binding records a leaf
  // whose gradient is flushed into p.grad at the end of backward();
  // a frozen binding is a plain constant.
  Var param(Parameter& p, bool trainable) {
    if (!trainable) return constant(p.value);
    Var v = push(p.value, true, &p);
    return v;
  }

  Var record(Tensor value, bool needs_grad, std::function<void(Node&)> adjoint) {
    Var v = push(std::move(value), needs_grad, nullptr);
    if (needs_grad) v.node()->adjoint = std::move(adjoint);
    return v;
  }

  // Reverse sweep from a scalar loss. Running backward twice without
  // recording anything new is a contract violation.
  void backward(Var loss);

  size_t num_nodes() const { return nodes_.size(); }
  void clear() {
    nodes_.clear();
    backward_ran_ = false;
  }

  // Gradient accumulation helpers for adjoint closures.
  static Tensor& grad_buf(Node& n) {
    if (!n.has_grad) {
      n.grad = Tensor::zeros(n.value.shape());
      n.has_grad = true;
    }
    return n.grad;
  }
  static void accum(Node* dst, const Tensor& g) {
    if (!dst->needs_grad) return;
    grad_buf(*dst).add_(g);
  }
  static void accum_scaled(Node* dst, double a, const Tensor& g) {
    if (!dst->needs_grad) return;
    grad_buf(*dst).axpy_(a, g);
  }

 private:
  Var push(Tensor value, bool needs_grad, Parameter* sink) {
    nodes_.emplace_back();
    Node& n = nodes_.back();
    n.tape = this;
    n.value = std::move(value);
    n.needs_grad = needs_grad;
    n.sink = sink;
    backward_ran_ = false;
    return Var(&n);
  }

  std::deque<Node> nodes_;
  bool backward_ran_ = false;
};

}  // namespace aedadapt

#endif  // AEDADAPT_AUTODIFF_TAPE_H_
