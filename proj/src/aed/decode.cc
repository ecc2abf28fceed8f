// aed/decode.cc

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

#include "aed/decode.h"

#include <algorithm>

#include "aed/forward.h"
#include "autodiff/ops.h"

namespace aedadapt {
namespace aed {

using namespace autodiff;

namespace {

struct LiveHyp {
  std::vector<int> tokens;
  double log_prob = 0.0;
  DecoderState state;
  Var context;   // g from the step that produced the last token
  Var embedding; // embedding of the last token
  bool done = false;
};

// One decoder step for a hypothesis: returns the per-token log posteriors
// and leaves the advanced state in *hyp.
Tensor advance(Graph& g, const AedParams& model, Var H, Var HV, LiveHyp* hyp) {
  Var s = decoder_step(g, model.dec, &hyp->state,
                       add(hyp->embedding, hyp->context));
  AttendResult att = attend(g, model.att, s, H, HV);
  hyp->context = att.context;
  Var lsm = log_softmax(output_logits(g, model.out, add(s, att.context)));
  return lsm.value();
}

}  // namespace

Hypothesis greedy_decode(const AedParams& model, const Tensor& X, int max_len) {
  AED_CHECK(max_len >= 1, "greedy_decode: max_len must be >= 1, got " << max_len);
  Tape tape;
  Graph g(tape, nullptr);
  Encoded enc = encode(g, model.enc, X);
  Var HV = attention_premul(g, model.att, enc.H);

  LiveHyp hyp;
  hyp.state = initial_decoder_state(g, model.dec);
  hyp.context = g.constant(Tensor::zeros({model.dims.d_model}));
  hyp.embedding = embedding_row(g(model.dec.embed), kSos);

  Hypothesis out;
  for (int step = 0; step < max_len; ++step) {
    Tensor lsm = advance(g, model, enc.H, HV, &hyp);
    int best = 0;
    for (int u = 1; u < lsm.size(); ++u) {
      if (lsm[u] > lsm[best]) best = u;
    }
    out.tokens.push_back(best);
    out.log_prob += lsm[best];
    if (best == kEos) break;
    hyp.embedding = embedding_row(g(model.dec.embed), best);
  }
  return out;
}

Hypothesis beam_decode(const AedParams& model, const Tensor& X, int beam_width,
                       int max_len) {
  AED_CHECK(beam_width >= 1,
            "beam_decode: beam_width must be >= 1, got " << beam_width);
  AED_CHECK(max_len >= 1, "beam_decode: max_len must be >= 1, got " << max_len);
  Tape tape;
  Graph g(tape, nullptr);
  Encoded enc = encode(g, model.enc, X);
  Var HV = attention_premul(g, model.att, enc.H);

  LiveHyp root;
  root.state = initial_decoder_state(g, model.dec);
  root.context = g.constant(Tensor::zeros({model.dims.d_model}));
  root.embedding = embedding_row(g(model.dec.embed), kSos);

  std::vector<LiveHyp> beam{root};

  struct Candidate {
    double log_prob;
    int hyp;    // index into beam
    int token;  // -1: carry the hypothesis over unchanged (terminal)
  };

  for (int step = 0; step < max_len; ++step) {
    bool any_live = false;
    std::vector<Candidate> cands;
    std::vector<Tensor> lsm_of(beam.size());
    for (size_t i = 0; i < beam.size(); ++i) {
      if (beam[i].done) {
        cands.push_back({beam[i].log_prob, static_cast<int>(i), -1});
        continue;
      }
      any_live = true;
      lsm_of[i] = advance(g, model, enc.H, HV, &beam[i]);
      for (int u = 0; u < lsm_of[i].size(); ++u)
        cands.push_back({beam[i].log_prob + lsm_of[i][u], static_cast<int>(i), u});
    }
    if (!any_live) break;

    // Deterministic order: score descending, then earlier hypothesis,
    // then lower token id (matches the greedy argmax tie rule).
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) {
                       if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
                       if (a.hyp != b.hyp) return a.hyp < b.hyp;
                       return a.token < b.token;
                     });
    if (static_cast<int>(cands.size()) > beam_width) cands.resize(beam_width);

    std::vector<LiveHyp> next;
    next.reserve(cands.size());
    for (const Candidate& c : cands) {
      LiveHyp h = beam[c.hyp];
      if (c.token >= 0) {
        h.tokens.push_back(c.token);
        h.log_prob = c.log_prob;
        if (c.token == kEos) {
          h.done = true;
        } else {
          h.embedding = embedding_row(g(model.dec.embed), c.token);
        }
      }
      next.push_back(std::move(h));
    }
    beam = std::move(next);
  }

  // Beam is sorted; the front is the best terminal-or-truncated hypothesis.
  Hypothesis out;
  out.tokens = beam.front().tokens;
  out.log_prob = beam.front().log_prob;
  return out;
}

}  // namespace aed
}  // namespace aedadapt
