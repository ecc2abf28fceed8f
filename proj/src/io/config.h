// io/config.h

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

#ifndef AEDADAPT_IO_CONFIG_H_
#define AEDADAPT_IO_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace aedadapt {
namespace io {

using OrderedJson = nlohmann::ordered_json;

// Architecture knobs. Scaled-down defaults; the full-scale shape
// (6 x 512 encoder, 2 x 512 decoder) remains reachable through overrides.
struct ModelConfig {
  int enc_layers = 2;
  int enc_width = 24;
  int d_model = 24;
  int d_att = 24;
  int dec_layers = 2;
  int char_dec_layers = 2;
  double ln_eps = 1e-5;
  double init_scale = 0.08;
};

// Synthetic corpus shape: per-unit prototype frames with per-speaker
// affine distortion, tempo and noise. Held-out speakers draw from
// systematically shifted ranges so that a model trained on the training
// speakers degrades on them.
struct DataConfig {
  int n_units = 64;
  int n_letters = 12;
  int unit_min_len = 1;
  int unit_max_len = 4;
  double zipf_exponent = 1.0;

  int raw_dim = 8;
  int stack = 3;
  int stride = 3;

  int utt_min_units = 2;
  int utt_max_units = 8;
  int dur_min = 2;
  int dur_max = 5;

  int train_speakers = 8;
  int heldout_speakers = 3;
  int train_utts_per_speaker = 25;
  int matched_test_per_speaker = 3;
  int adapt_utts = 20;
  int test_utts = 20;

  double train_noise = 0.03;
  double heldout_noise = 0.05;
  double train_warp = 0.15;
  double heldout_warp = 0.5;
  double train_gain_lo = 0.9;
  double train_gain_hi = 1.1;
  double heldout_gain_lo = 1.15;
  double heldout_gain_hi = 1.35;
  double train_offset = 0.1;
  double heldout_offset = 0.5;
  double train_tempo_lo = 0.9;
  double train_tempo_hi = 1.1;
  double heldout_tempo_lo = 1.2;
  double heldout_tempo_hi = 1.5;

  int feat_dim() const { return raw_dim * stack; }
};

struct TrainConfig {
  double lr = 0.5;
  int epochs = 120;
  int batch = 8;
  double clip = 5.0;  // 0 disables gradient clipping
  uint64_t seed = 1;
};

// Adaptation always uses plain SGD with a fixed learning rate and no
// clipping, so single-step oracles reproduce updates exactly.
struct AdaptConfig {
  double lr = 0.05;
  int epochs = 30;
  int batch = 5;
  int beam_width = 4;
  int max_decode_len = 12;
};

struct GridConfig {
  std::vector<std::string> methods = {"kld", "asa", "mtl"};
  std::vector<double> kld_weights = {0.0, 0.2, 0.5, 0.8};
  std::vector<double> asa_weights = {0.2, 0.5, 0.8};
  std::vector<double> mtl_weights = {0.2, 0.5, 0.8};
  std::vector<int> sizes = {10, 20};
  std::vector<std::string> supervision = {"sup", "unsup"};
  std::vector<uint64_t> seeds = {1, 2, 3};
};

struct Config {
  ModelConfig model;
  DataConfig data;
  TrainConfig train_si;
  TrainConfig train_char;
  AdaptConfig adapt;
  GridConfig grid;
};

Config default_config();

// JSON binding with full-schema validation: unknown keys and type
// mismatches are usage errors. Serialization is canonical (fixed key
// order), so round trips are byte-stable.
OrderedJson to_json(const Config& c);
Config config_from_json(const OrderedJson& j);

Config load_config_file(const std::string& path);
std::string dump_config(const Config& c);  // canonical text, 2-space indent

// Applies `json_value` (parsed as JSON, with bare-word fallback to
// string) at a dotted path such as "model.enc_width".
void apply_override(Config* c, const std::string& dotted_key,
                    const std::string& json_value);

}  // namespace io
}  // namespace aedadapt

#endif  // AEDADAPT_IO_CONFIG_H_
