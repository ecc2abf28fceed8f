// aed/model.cc

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

#include "aed/model.h"

#include "nn/init.h"

namespace aedadapt {
namespace aed {

EncoderParams::EncoderParams(const std::string& prefix, int feat_dim,
                             int n_layers, int width, int d_model,
                             double ln_eps)
    : proj_w(prefix + ".proj.W", Tensor::zeros({2 * width, d_model})),
      proj_b(prefix + ".proj.b", Tensor::zeros({d_model})) {
  AED_CHECK(n_layers >= 1, "encoder needs at least one layer");
  layers.reserve(static_cast<size_t>(n_layers));
  for (int l = 0; l < n_layers; ++l) {
    const int in_dim = l == 0 ? feat_dim : 2 * width;
    layers.emplace_back(prefix + ".l" + std::to_string(l), in_dim, width,
                        ln_eps);
  }
}

std::vector<Parameter*> EncoderParams::all() {
  std::vector<Parameter*> out;
  for (auto& l : layers)
    for (Parameter* p : l.all()) out.push_back(p);
  out.push_back(&proj_w);
  out.push_back(&proj_b);
  return out;
}

void EncoderParams::init(Rng& rng, double scale) {
  for (auto& l : layers) l.init(rng, scale);
  nn::init_uniform(proj_w, rng, scale);
}

AttentionParams::AttentionParams(const std::string& prefix, int d_model,
                                 int d_att)
    : W(prefix + ".W", Tensor::zeros({d_model, d_att})),
      V(prefix + ".V", Tensor::zeros({d_model, d_att})),
      b(prefix + ".b", Tensor::zeros({d_att})),
      v(prefix + ".v", Tensor::zeros({d_att})) {}

void AttentionParams::init(Rng& rng, double scale) {
  nn::init_uniform(W, rng, scale);
  nn::init_uniform(V, rng, scale);
  nn::init_uniform(v, rng, scale);
}

DecoderParams::DecoderParams(const std::string& prefix, int n_layers,
                             int d_model, int vocab)
    : embed(prefix + ".embed", Tensor::zeros({vocab, d_model})) {
  AED_CHECK(n_layers >= 1, "decoder needs at least one layer");
  layers.reserve(static_cast<size_t>(n_layers));
  for (int l = 0; l < n_layers; ++l)
    layers.emplace_back(prefix + ".l" + std::to_string(l), d_model, d_model);
}

std::vector<Parameter*> DecoderParams::all() {
  std::vector<Parameter*> out;
  for (auto& l : layers)
    for (Parameter* p : l.all()) out.push_back(p);
  out.push_back(&embed);
  return out;
}

void DecoderParams::init(Rng& rng, double scale) {
  for (auto& l : layers) l.init(rng, scale);
  nn::init_uniform(embed, rng, scale);
}

OutputParams::OutputParams(const std::string& prefix, int vocab, int d_model)
    : W(prefix + ".W", Tensor::zeros({vocab, d_model})),
      b(prefix + ".b", Tensor::zeros({vocab})) {}

void OutputParams::init(Rng& rng, double scale) {
  nn::init_uniform(W, rng, scale);
}

AedParams::AedParams(const ModelDims& d)
    : dims(d),
      enc("enc", d.feat_dim, d.enc_layers, d.enc_width, d.d_model, d.ln_eps),
      att("att", d.d_model, d.d_att),
      dec("dec", d.dec_layers, d.d_model, d.vocab),
      out("out", d.vocab, d.d_model) {
  AED_CHECK(d.vocab > kEos, "vocabulary must include <sos> and <eos>");
}

void AedParams::init(uint64_t seed) {
  Rng rng(seed);
  enc.init(rng, dims.init_scale);
  att.init(rng, dims.init_scale);
  dec.init(rng, dims.init_scale);
  out.init(rng, dims.init_scale);
}

std::vector<Parameter*> AedParams::all() {
  std::vector<Parameter*> ps = enc.all();
  for (Parameter* p : att.all()) ps.push_back(p);
  for (Parameter* p : dec.all()) ps.push_back(p);
  for (Parameter* p : out.all()) ps.push_back(p);
  return ps;
}

std::vector<Parameter*> AedParams::encoder_params() { return enc.all(); }

std::vector<Parameter*> AedParams::feature_params() {
  std::vector<Parameter*> ps = enc.all();
  for (Parameter* p : att.all()) ps.push_back(p);
  for (Parameter* p : dec.all()) ps.push_back(p);
  return ps;
}

std::vector<Parameter*> AedParams::classifier_params() { return out.all(); }

CharBranchParams::CharBranchParams(int char_vocab, int d_model, int d_att,
                                   int n_layers)
    : vocab(char_vocab),
      att("chr.att", d_model, d_att),
      dec("chr.dec", n_layers, d_model, char_vocab),
      out("chr.out", char_vocab, d_model) {
  AED_CHECK(char_vocab > kEos, "character vocabulary must include <sos>/<eos>");
}

void CharBranchParams::init(uint64_t seed, double scale) {
  Rng rng(seed);
  att.init(rng, scale);
  dec.init(rng, scale);
  out.init(rng, scale);
}

std::vector<Parameter*> CharBranchParams::all() {
  std::vector<Parameter*> ps = att.all();
  for (Parameter* p : dec.all()) ps.push_back(p);
  for (Parameter* p : out.all()) ps.push_back(p);
  return ps;
}

}  // namespace aed
}  // namespace aedadapt
