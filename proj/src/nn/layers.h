// nn/layers.h

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

#ifndef AEDADAPT_NN_LAYERS_H_
#define AEDADAPT_NN_LAYERS_H_

#include <string>
#include <vector>

#include "autodiff/graph.h"
#include "common/rng.h"

namespace aedadapt {
namespace nn {

// Layer normalization over a single vector: gain * (x - mean) / sqrt(var
// + epsilon) + bias.
struct LayerNormParams {
  Parameter gain;
  Parameter bias;
  double epsilon;

  LayerNormParams(const std::string& prefix, int width, double eps = 1e-5)
      : gain(prefix + ".gain", Tensor::full({width}, 1.0)),
        bias(prefix + ".bias", Tensor::zeros({width})),
        epsilon(eps) {}

  int width() const { return static_cast<int>(gain.value.size()); }
  std::vector<Parameter*> all() { return {&gain, &bias}; }
};

Var layer_norm(Graph& g, const LayerNormParams& p, Var x);

// Gated recurrent unit cell parameters. W* act on the input, U* on the
// recurrent state; z is the update gate, r the reset gate, h the
// candidate.
struct GruParams {
  Parameter Wz, Wr, Wh;  // [input_dim x hidden_dim]
  Parameter Uz, Ur, Uh;  // [hidden_dim x hidden_dim]
  Parameter bz, br, bh;  // [hidden_dim]
  int input_dim;
  int hidden_dim;

  GruParams(const std::string& prefix, int in_dim, int hid_dim)
      : Wz(prefix + ".Wz", Tensor::zeros({in_dim, hid_dim})),
        Wr(prefix + ".Wr", Tensor::zeros({in_dim, hid_dim})),
        Wh(prefix + ".Wh", Tensor::zeros({in_dim, hid_dim})),
        Uz(prefix + ".Uz", Tensor::zeros({hid_dim, hid_dim})),
        Ur(prefix + ".Ur", Tensor::zeros({hid_dim, hid_dim})),
        Uh(prefix + ".Uh", Tensor::zeros({hid_dim, hid_dim})),
        bz(prefix + ".bz", Tensor::zeros({hid_dim})),
        br(prefix + ".br", Tensor::zeros({hid_dim})),
        bh(prefix + ".bh", Tensor::zeros({hid_dim})),
        input_dim(in_dim),
        hidden_dim(hid_dim) {}

  std::vector<Parameter*> all() {
    return {&Wz, &Wr, &Wh, &Uz, &Ur, &Uh, &bz, &br, &bh};
  }
  void init(Rng& rng, double scale);
};

// One step:
//   z = sigmoid(x Wz + h Uz + bz)
//   r = sigmoid(x Wr + h Ur + br)
//   hc = tanh(x Wh + (r * h) Uh + bh)
//   h' = (1 - z) * h + z * hc
Var gru_cell(Graph& g, const GruParams& p, Var x, Var h_prev);

// One bidirectional layer: a forward and a backward scan over the input
// rows, concatenated per step and layer-normalized.
struct BiGruLayerParams {
  GruParams fwd;
  GruParams bwd;
  LayerNormParams ln;  // over the concatenated 2 * hidden_dim output

  BiGruLayerParams(const std::string& prefix, int in_dim, int hid_dim,
                   double ln_eps)
      : fwd(prefix + ".fwd", in_dim, hid_dim),
        bwd(prefix + ".bwd", in_dim, hid_dim),
        ln(prefix + ".ln", 2 * hid_dim, ln_eps) {}

  std::vector<Parameter*> all();
  void init(Rng& rng, double scale);
};

std::vector<Var> bigru_layer(Graph& g, const BiGruLayerParams& p,
                             const std::vector<Var>& xs);

// Stack of bidirectional layers; returns per-step rows of width
// 2 * hidden_dim of the last layer.
std::vector<Var> bigru_stack(Graph& g,
                             const std::vector<BiGruLayerParams>& layers,
                             const std::vector<Var>& xs);

// Two tanh hidden layers and a 1-unit linear output; returns the
// pre-sigmoid logit as a scalar.
struct FeedForwardParams {
  Parameter W1, b1;  // [in x hidden], [hidden]
  Parameter W2, b2;  // [hidden x hidden], [hidden]
  Parameter W3, b3;  // [hidden x 1], [1]

  FeedForwardParams(const std::string& prefix, int in_dim, int hidden_dim)
      : W1(prefix + ".W1", Tensor::zeros({in_dim, hidden_dim})),
        b1(prefix + ".b1", Tensor::zeros({hidden_dim})),
        W2(prefix + ".W2", Tensor::zeros({hidden_dim, hidden_dim})),
        b2(prefix + ".b2", Tensor::zeros({hidden_dim})),
        W3(prefix + ".W3", Tensor::zeros({hidden_dim, 1})),
        b3(prefix + ".b3", Tensor::zeros({1})) {}

  int input_dim() const { return W1.value.rows(); }
  std::vector<Parameter*> all() { return {&W1, &b1, &W2, &b2, &W3, &b3}; }
  void init(Rng& rng, double scale);
};

Var feedforward_logit(Graph& g, const FeedForwardParams& p, Var x);

}  // namespace nn
}  // namespace aedadapt

#endif  // AEDADAPT_NN_LAYERS_H_
