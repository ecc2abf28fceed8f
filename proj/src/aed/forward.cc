// aed/forward.cc

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

#include "aed/forward.h"

#include <cmath>

#include "autodiff/ops.h"

namespace aedadapt {
namespace aed {

using namespace autodiff;

Encoded encode(Graph& g, const EncoderParams& enc, const Tensor& X) {
  AED_CHECK(X.dim() == 2 && X.rows() >= 1,
            "encode: input must be a non-empty [T x feat] tensor, got "
                << shape_str(X.shape()));
  const int T = X.rows();
  const int feat = X.cols();
  AED_CHECK(feat == enc.layers[0].fwd.input_dim,
            "encode: frame width " << feat << " vs encoder input width "
                                   << enc.layers[0].fwd.input_dim);

  std::vector<Var> rows(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t) {
    Tensor r({feat});
    for (int c = 0; c < feat; ++c) r[c] = X.at2(t, c);
    rows[static_cast<size_t>(t)] = g.constant(std::move(r));
  }
  std::vector<Var> hidden = nn::bigru_stack(g, enc.layers, rows);
  Var H_raw = stack_rows(hidden);
  Var H = add_rowvec(matmul(H_raw, g(enc.proj_w)), g(enc.proj_b));
  return {H, T};
}

Var attention_premul(Graph& g, const AttentionParams& att, Var H) {
  return matmul(H, g(att.V));
}

AttendResult attend(Graph& g, const AttentionParams& att, Var query, Var H,
                    Var HV) {
  AED_CHECK(H.value().dim() == 2 && H.value().rows() >= 1,
            "attend: H must be non-empty, got " << shape_str(H.value().shape()));
  AED_CHECK(query.value().size() == att.W.value.rows(),
            "attend: query width " << shape_str(query.value().shape())
                                   << " vs attention input width "
                                   << att.W.value.rows());
  Var q = add(matmul(query, g(att.W)), g(att.b));       // [d_att]
  Var scores = matmul(tanh(add_rowvec(HV, q)), g(att.v));  // [T]
  Var weights = softmax(scores);
  Var context = matmul(weights, H);  // [d]
  return {context, weights};
}

AttendResult attend(Graph& g, const AttentionParams& att, Var query, Var H) {
  return attend(g, att, query, H, attention_premul(g, att, H));
}

DecoderState initial_decoder_state(Graph& g, const DecoderParams& dec) {
  DecoderState st;
  st.h.reserve(dec.layers.size());
  for (const auto& layer : dec.layers)
    st.h.push_back(g.constant(Tensor::zeros({layer.hidden_dim})));
  return st;
}

Var decoder_step(Graph& g, const DecoderParams& dec, DecoderState* state,
                 Var input) {
  AED_CHECK(state != nullptr && state->h.size() == dec.layers.size(),
            "decoder_step: state has " << (state ? state->h.size() : 0)
                                       << " layers, expected "
                                       << dec.layers.size());
  Var x = input;
  for (size_t l = 0; l < dec.layers.size(); ++l) {
    state->h[l] = nn::gru_cell(g, dec.layers[l], x, state->h[l]);
    x = state->h[l];
  }
  return x;
}

Var output_logits(Graph& g, const OutputParams& out, Var feature) {
  return add(matmul(g(out.W), feature), g(out.b));
}

Var output_distribution(Graph& g, const OutputParams& out, Var s, Var context) {
  return softmax(output_logits(g, out, add(s, context)));
}

ForwardResult branch_forward(Graph& g, const Encoded& enc,
                             const BranchRefs& branch,
                             std::span<const int> labels) {
  const int vocab = branch.out->W.value.rows();
  AED_CHECK(!labels.empty(), "branch_forward: empty label sequence");
  AED_CHECK(labels.back() == kEos, "branch_forward: labels must end with <eos>");
  for (int y : labels)
    AED_CHECK(y >= 0 && y < vocab,
              "branch_forward: label " << y << " outside vocabulary of size "
                                       << vocab);

  ForwardResult r;
  r.enc = enc;
  Var HV = attention_premul(g, *branch.att, enc.H);

  const int d = branch.dec->layers[0].hidden_dim;
  DecoderState state = initial_decoder_state(g, *branch.dec);
  Var e_prev = embedding_row(g(branch.dec->embed), kSos);
  Var g_prev = g.constant(Tensor::zeros({d}));

  r.steps.reserve(labels.size());
  for (size_t t = 0; t < labels.size(); ++t) {
    StepOutput step;
    step.s = decoder_step(g, *branch.dec, &state, add(e_prev, g_prev));
    AttendResult att = attend(g, *branch.att, step.s, enc.H, HV);
    step.context = att.context;
    step.weights = att.weights;
    step.feature = add(step.s, step.context);
    step.logits = output_logits(g, *branch.out, step.feature);
    step.lsm = log_softmax(step.logits);
    r.steps.push_back(step);

    e_prev = embedding_row(g(branch.dec->embed), labels[t]);
    g_prev = step.context;
  }
  return r;
}

ForwardResult teacher_forward(Graph& g, const EncoderParams& enc,
                              const BranchRefs& branch, const Tensor& X,
                              std::span<const int> labels) {
  return branch_forward(g, encode(g, enc, X), branch, labels);
}

Var sequence_nll(Graph& g, const ForwardResult& fwd,
                 std::span<const int> labels) {
  AED_CHECK(fwd.steps.size() == labels.size(),
            "sequence_nll: " << fwd.steps.size() << " steps vs "
                             << labels.size() << " labels");
  Var acc;
  for (size_t t = 0; t < labels.size(); ++t) {
    Var picked = element(fwd.steps[t].lsm, labels[t]);
    acc = t == 0 ? picked : add(acc, picked);
  }
  return scale(acc, -1.0);
}

Tensor step_posteriors(const ForwardResult& fwd) {
  AED_CHECK(!fwd.steps.empty(), "step_posteriors: empty forward result");
  const int U = static_cast<int>(fwd.steps[0].logits.value().size());
  Tensor out({static_cast<int>(fwd.steps.size()), U});
  for (size_t t = 0; t < fwd.steps.size(); ++t) {
    Tensor p = autodiff::softmax_rows(fwd.steps[t].logits.value());
    for (int u = 0; u < U; ++u) out.at2(static_cast<int>(t), u) = p[u];
  }
  return out;
}

std::vector<Tensor> step_features(const ForwardResult& fwd) {
  std::vector<Tensor> out;
  out.reserve(fwd.steps.size());
  for (const auto& step : fwd.steps) out.push_back(step.feature.value());
  return out;
}

double loss_from_posteriors(const Tensor& posteriors,
                            std::span<const int> labels) {
  AED_CHECK(posteriors.dim() == 2 &&
                posteriors.rows() == static_cast<int>(labels.size()),
            "loss_from_posteriors: " << shape_str(posteriors.shape()) << " vs "
                                     << labels.size() << " labels");
  double loss = 0.0;
  for (size_t t = 0; t < labels.size(); ++t) {
    const double p = posteriors.at2(static_cast<int>(t), labels[t]);
    if (!(p > 0.0))
      AED_THROW(ErrorKind::kDomain,
                "loss_from_posteriors: zero posterior at step " << t);
    loss -= std::log(p);
  }
  return loss;
}

}  // namespace aed
}  // namespace aedadapt
