// nn/layers.cc

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

#include "nn/layers.h"

#include "autodiff/ops.h"
#include "nn/init.h"

namespace aedadapt {
namespace nn {

using namespace autodiff;

Var layer_norm(Graph& g, const LayerNormParams& p, Var x) {
  AED_CHECK(x.value().dim() == 1, "layer_norm: expects 1-D input, got "
                                      << shape_str(x.value().shape()));
  AED_CHECK(x.value().size() >= 2,
            "layer_norm: width must be >= 2, got " << x.value().size());
  AED_CHECK(x.value().size() == p.width(),
            "layer_norm: input width " << x.value().size()
                                       << " vs normalized width " << p.width());
  Var mu = mean(x);
  Var centered = add_scalar(x, scale(mu, -1.0));
  Var var = mean(mul(centered, centered));
  Var inv_std = pow_const(add_const(var, p.epsilon), -0.5);
  Var normalized = mul_scalar(centered, inv_std);
  return add(mul(g(p.gain), normalized), g(p.bias));
}

void GruParams::init(Rng& rng, double scale) {
  init_uniform(Wz, rng, scale);
  init_uniform(Wr, rng, scale);
  init_uniform(Wh, rng, scale);
  init_uniform(Uz, rng, scale);
  init_uniform(Ur, rng, scale);
  init_uniform(Uh, rng, scale);
  // biases stay zero
}

Var gru_cell(Graph& g, const GruParams& p, Var x, Var h_prev) {
  AED_CHECK(x.value().dim() == 1 && x.value().size() == p.input_dim,
            "gru_cell: input is " << shape_str(x.value().shape())
                                  << ", expected [" << p.input_dim << "]");
  AED_CHECK(h_prev.value().dim() == 1 && h_prev.value().size() == p.hidden_dim,
            "gru_cell: state is " << shape_str(h_prev.value().shape())
                                  << ", expected [" << p.hidden_dim << "]");
  Var z = sigmoid(add(add(matmul(x, g(p.Wz)), matmul(h_prev, g(p.Uz))), g(p.bz)));
  Var r = sigmoid(add(add(matmul(x, g(p.Wr)), matmul(h_prev, g(p.Ur))), g(p.br)));
  Var hc = tanh(add(add(matmul(x, g(p.Wh)), matmul(mul(r, h_prev), g(p.Uh))), g(p.bh)));
  Var keep = add_const(scale(z, -1.0), 1.0);  // 1 - z
  return add(mul(keep, h_prev), mul(z, hc));
}

std::vector<Parameter*> BiGruLayerParams::all() {
  std::vector<Parameter*> out = fwd.all();
  for (Parameter* p : bwd.all()) out.push_back(p);
  for (Parameter* p : ln.all()) out.push_back(p);
  return out;
}

void BiGruLayerParams::init(Rng& rng, double scale) {
  fwd.init(rng, scale);
  bwd.init(rng, scale);
  // layer norm keeps unit gain / zero bias
}

std::vector<Var> bigru_layer(Graph& g, const BiGruLayerParams& p,
                             const std::vector<Var>& xs) {
  AED_CHECK(!xs.empty(), "bigru_layer: empty input sequence");
  const int steps = static_cast<int>(xs.size());
  const int d = p.fwd.hidden_dim;

  std::vector<Var> hf(steps), hb(steps);
  Var h = g.constant(Tensor::zeros({d}));
  for (int t = 0; t < steps; ++t) {
    h = gru_cell(g, p.fwd, xs[t], h);
    hf[t] = h;
  }
  h = g.constant(Tensor::zeros({d}));
  for (int t = steps - 1; t >= 0; --t) {
    h = gru_cell(g, p.bwd, xs[t], h);
    hb[t] = h;
  }

  std::vector<Var> out(steps);
  for (int t = 0; t < steps; ++t)
    out[t] = layer_norm(g, p.ln, autodiff::concat(hf[t], hb[t]));
  return out;
}

std::vector<Var> bigru_stack(Graph& g,
                             const std::vector<BiGruLayerParams>& layers,
                             const std::vector<Var>& xs) {
  AED_CHECK(!layers.empty(), "bigru_stack: no layers");
  std::vector<Var> rows = bigru_layer(g, layers[0], xs);
  for (size_t l = 1; l < layers.size(); ++l)
    rows = bigru_layer(g, layers[l], rows);
  return rows;
}

void FeedForwardParams::init(Rng& rng, double scale) {
  init_uniform(W1, rng, scale);
  init_uniform(W2, rng, scale);
  init_uniform(W3, rng, scale);
}

Var feedforward_logit(Graph& g, const FeedForwardParams& p, Var x) {
  AED_CHECK(x.value().dim() == 1 && x.value().size() == p.input_dim(),
            "feedforward_logit: input is " << shape_str(x.value().shape())
                                           << ", expected ["
                                           << p.input_dim() << "]");
  Var h1 = tanh(add(matmul(x, g(p.W1)), g(p.b1)));
  Var h2 = tanh(add(matmul(h1, g(p.W2)), g(p.b2)));
  return sum(add(matmul(h2, g(p.W3)), g(p.b3)));
}

}  // namespace nn
}  // namespace aedadapt
