// aed/forward.h

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

#ifndef AEDADAPT_AED_FORWARD_H_
#define AEDADAPT_AED_FORWARD_H_

#include <span>
#include <vector>

#include "aed/model.h"
#include "autodiff/graph.h"

namespace aedadapt {
namespace aed {

// Shape symbols used below:
//   T  encoded length (== stacked frame count)
//   d  d_model
//   U  output vocabulary size
//   L  label sequence length (ends with <eos>)

struct Encoded {
  Var H;  // [T x d]
  int T = 0;
};

// Encoder stack over the rows of X, then the 2*enc_width -> d projection.
Encoded encode(Graph& g, const EncoderParams& enc, const Tensor& X);

struct AttendResult {
  Var context;  // [d]
  Var weights;  // [T], non-negative, sums to 1
};

// H . V, computed once per utterance and reused across decoder steps.
Var attention_premul(Graph& g, const AttentionParams& att, Var H);

AttendResult attend(Graph& g, const AttentionParams& att, Var query, Var H,
                    Var HV);
// Convenience overload that computes H . V itself.
AttendResult attend(Graph& g, const AttentionParams& att, Var query, Var H);

struct DecoderState {
  std::vector<Var> h;  // one [d] state per decoder layer
};

DecoderState initial_decoder_state(Graph& g, const DecoderParams& dec);

// Consumes `input` (= e_prev + g_prev), advances every layer's state and
// returns the top layer's new hidden state s.
Var decoder_step(Graph& g, const DecoderParams& dec, DecoderState* state,
                 Var input);

// softmax(W (s + g) + b) as recorded values.
Var output_logits(Graph& g, const OutputParams& out, Var feature);
Var output_distribution(Graph& g, const OutputParams& out, Var s, Var context);

struct StepOutput {
  Var s;        // decoder top state
  Var context;  // attention context g_t
  Var weights;  // attention weights
  Var feature;  // deep feature f_t = s_t + g_t
  Var logits;   // [U]
  Var lsm;      // log-softmax of logits
};

struct ForwardResult {
  Encoded enc;
  std::vector<StepOutput> steps;  // one per label
};

// Teacher-forced pass over an already-encoded utterance. Step t consumes
// the previous label's embedding (starting from <sos>) plus the previous
// context, then attends with the fresh decoder state.
ForwardResult branch_forward(Graph& g, const Encoded& enc,
                             const BranchRefs& branch,
                             std::span<const int> labels);

// encode + branch_forward in one call.
ForwardResult teacher_forward(Graph& g, const EncoderParams& enc,
                              const BranchRefs& branch, const Tensor& X,
                              std::span<const int> labels);

// Sequence cross-entropy: -sum_t log p(y_t), through the fused
// log-softmax + gather path.
Var sequence_nll(Graph& g, const ForwardResult& fwd,
                 std::span<const int> labels);

// Per-step posteriors as plain values, [L x U].
Tensor step_posteriors(const ForwardResult& fwd);

// Per-step deep features f_t as plain values.
std::vector<Tensor> step_features(const ForwardResult& fwd);

// -sum_t log posteriors[t, labels[t]] over given posterior rows.
double loss_from_posteriors(const Tensor& posteriors,
                            std::span<const int> labels);

}  // namespace aed
}  // namespace aedadapt

#endif  // AEDADAPT_AED_FORWARD_H_
