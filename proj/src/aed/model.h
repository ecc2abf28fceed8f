// aed/model.h

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

#ifndef AEDADAPT_AED_MODEL_H_
#define AEDADAPT_AED_MODEL_H_

#include <string>
#include <vector>

#include "nn/layers.h"

namespace aedadapt {
namespace aed {

// Reserved token ids, shared by the unit and character vocabularies.
inline constexpr int kSos = 0;
inline constexpr int kEos = 1;

struct ModelDims {
  int feat_dim = 24;    // stacked input frame width
  int enc_layers = 2;
  int enc_width = 24;   // per direction
  int d_model = 24;     // decoder state = embedding = context width
  int d_att = 24;
  int dec_layers = 2;
  int vocab = 66;       // includes <sos> and <eos>
  double ln_eps = 1e-5;
  double init_scale = 0.08;
};

// Bidirectional GRU stack plus the linear projection that reduces the
// concatenated 2 * enc_width features to d_model, so that embeddings,
// decoder states and context vectors can be summed.
struct EncoderParams {
  std::vector<nn::BiGruLayerParams> layers;
  Parameter proj_w;  // [2 * enc_width x d_model]
  Parameter proj_b;  // [d_model]

  EncoderParams(const std::string& prefix, int feat_dim, int n_layers,
                int width, int d_model, double ln_eps);

  std::vector<Parameter*> all();
  void init(Rng& rng, double scale);
};

// Additive attention: score_i = v . tanh(W q + V h_i + b).
struct AttentionParams {
  Parameter W;  // [d_model x d_att]
  Parameter V;  // [d_model x d_att]
  Parameter b;  // [d_att]
  Parameter v;  // [d_att]

  AttentionParams(const std::string& prefix, int d_model, int d_att);

  std::vector<Parameter*> all() { return {&W, &V, &b, &v}; }
  void init(Rng& rng, double scale);
};

// Unidirectional GRU stack fed with e_prev + g_prev, plus the label
// embedding table.
struct DecoderParams {
  std::vector<nn::GruParams> layers;
  Parameter embed;  // [vocab x d_model]

  DecoderParams(const std::string& prefix, int n_layers, int d_model, int vocab);

  std::vector<Parameter*> all();
  void init(Rng& rng, double scale);
};

// Output layer: softmax(W (s + g) + b).
struct OutputParams {
  Parameter W;  // [vocab x d_model]
  Parameter b;  // [vocab]

  OutputParams(const std::string& prefix, int vocab, int d_model);

  std::vector<Parameter*> all() { return {&W, &b}; }
  void init(Rng& rng, double scale);
};

// Non-owning view of one decoding head (attention + decoder + output).
struct BranchRefs {
  const AttentionParams* att;
  const DecoderParams* dec;
  const OutputParams* out;
};

// Full attention-based encoder-decoder model.
struct AedParams {
  ModelDims dims;
  EncoderParams enc;
  AttentionParams att;
  DecoderParams dec;
  OutputParams out;

  explicit AedParams(const ModelDims& d);

  void init(uint64_t seed);
  AedParams clone() const { return *this; }

  BranchRefs branch() const { return {&att, &dec, &out}; }

  // Fixed parameter order used for checkpoints, optimizer steps and
  // gradient accumulation.
  std::vector<Parameter*> all();

  // Encoder group (stack + projection); the trainable set of MTL
  // adaptation.
  std::vector<Parameter*> encoder_params();

  // Feature-extractor / classifier split: the output layer alone is the
  // classifier, everything else (encoder, attention, all decoder GRU
  // layers, embedding) is the feature extractor. The two groups
  // partition all() exactly.
  std::vector<Parameter*> feature_params();
  std::vector<Parameter*> classifier_params();
};

// Character-level head that shares an encoder by reference. The encoder
// itself is never duplicated here.
struct CharBranchParams {
  int vocab;
  AttentionParams att;
  DecoderParams dec;
  OutputParams out;

  CharBranchParams(int char_vocab, int d_model, int d_att, int n_layers);

  void init(uint64_t seed, double scale);
  BranchRefs branch() const { return {&att, &dec, &out}; }
  std::vector<Parameter*> all();
};

}  // namespace aed
}  // namespace aedadapt

#endif  // AEDADAPT_AED_MODEL_H_
