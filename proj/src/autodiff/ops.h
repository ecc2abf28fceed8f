// autodiff/ops.h

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

#ifndef AEDADAPT_AUTODIFF_OPS_H_
#define AEDADAPT_AUTODIFF_OPS_H_

#include <vector>

#include "autodiff/tape.h"

namespace aedadapt {
namespace autodiff {

// Differentiable primitives. Every operation records its result on the
// tape of its inputs and carries an exact analytic adjoint. Shape
// conformance is checked with both shapes in the message.

// Matrix product with 1-D promotion:
//   [m x k] x [k x n] -> [m x n]
//   [k]     x [k x n] -> [n]         (row vector)
//   [m x k] x [k]     -> [m]         (column vector)
//   [k]     x [k]     -> scalar      (dot product)
Var matmul(Var a, Var b);

Var add(Var a, Var b);            // same shape
Var add_rowvec(Var m, Var v);     // [r x c] + broadcast [c]
Var add_scalar(Var a, Var s);     // any shape + broadcast scalar
Var mul(Var a, Var b);            // elementwise, same shape
Var mul_scalar(Var a, Var s);     // any shape * broadcast scalar

Var scale(Var a, double c);       // elementwise * constant
Var add_const(Var a, double c);   // elementwise + constant
Var pow_const(Var a, double p);   // elementwise power; x > 0 required
                                  // unless p is a non-negative integer

Var tanh(Var a);
Var sigmoid(Var a);
Var exp(Var a);
Var log(Var a);                   // domain error on non-positive input
Var log_sigmoid(Var a);           // numerically stable log(sigmoid(x))

Var concat(Var a, Var b);                    // 1-D ++ 1-D
Var slice(Var a, int begin, int len);        // 1-D range
Var row(Var m, int r);                       // 2-D row -> 1-D
Var stack_rows(const std::vector<Var>& rows);  // n x [d] -> [n x d]

Var sum(Var a);    // all elements -> scalar
Var mean(Var a);   // all elements -> scalar

// Softmax over the last axis (each row of a 2-D tensor; the whole of a
// 1-D tensor). Forward values are computed with max subtraction.
Var softmax(Var a);
Var log_softmax(Var a);

Var element(Var a, int64_t i);         // single entry -> scalar
Var embedding_row(Var table, int id);  // [V x d] row lookup -> [d]

// Identity forward; multiplies the gradient by -lambda on the way back.
Var grad_reverse(Var a, double lambda);

// Plain-tensor row softmax helpers shared with evaluation code.
Tensor softmax_rows(const Tensor& z);
Tensor log_softmax_rows(const Tensor& z);

}  // namespace autodiff
}  // namespace aedadapt

#endif  // AEDADAPT_AUTODIFF_OPS_H_
