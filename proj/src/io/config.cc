// io/config.cc

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

#include "io/config.h"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "common/error.h"

namespace aedadapt {
namespace io {

namespace {

// Reads known keys from one JSON object and rejects everything else.
class FieldReader {
 public:
  FieldReader(const OrderedJson& j, std::string ctx)
      : j_(j), ctx_(std::move(ctx)) {
    AED_CHECK_USAGE(j.is_object(), "config: '" << ctx_ << "' must be an object");
  }

  template <typename T>
  void get(const char* key, T* out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;  // keep the default
    try {
      *out = j_.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
      AED_THROW(ErrorKind::kUsage,
                "config: bad value for '" << ctx_ << "." << key
                                          << "': " << e.what());
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      AED_CHECK_USAGE(seen_.count(it.key()) > 0,
                      "config: unknown key '" << ctx_ << "." << it.key() << "'");
    }
  }

 private:
  const OrderedJson& j_;
  std::string ctx_;
  std::set<std::string> seen_;
};

void read_model(const OrderedJson& j, ModelConfig* m) {
  FieldReader r(j, "model");
  r.get("enc_layers", &m->enc_layers);
  r.get("enc_width", &m->enc_width);
  r.get("d_model", &m->d_model);
  r.get("d_att", &m->d_att);
  r.get("dec_layers", &m->dec_layers);
  r.get("char_dec_layers", &m->char_dec_layers);
  r.get("ln_eps", &m->ln_eps);
  r.get("init_scale", &m->init_scale);
  r.finish();
}

void read_data(const OrderedJson& j, DataConfig* d) {
  FieldReader r(j, "data");
  r.get("n_units", &d->n_units);
  r.get("n_letters", &d->n_letters);
  r.get("unit_min_len", &d->unit_min_len);
  r.get("unit_max_len", &d->unit_max_len);
  r.get("zipf_exponent", &d->zipf_exponent);
  r.get("raw_dim", &d->raw_dim);
  r.get("stack", &d->stack);
  r.get("stride", &d->stride);
  r.get("utt_min_units", &d->utt_min_units);
  r.get("utt_max_units", &d->utt_max_units);
  r.get("dur_min", &d->dur_min);
  r.get("dur_max", &d->dur_max);
  r.get("train_speakers", &d->train_speakers);
  r.get("heldout_speakers", &d->heldout_speakers);
  r.get("train_utts_per_speaker", &d->train_utts_per_speaker);
  r.get("matched_test_per_speaker", &d->matched_test_per_speaker);
  r.get("adapt_utts", &d->adapt_utts);
  r.get("test_utts", &d->test_utts);
  r.get("train_noise", &d->train_noise);
  r.get("heldout_noise", &d->heldout_noise);
  r.get("train_warp", &d->train_warp);
  r.get("heldout_warp", &d->heldout_warp);
  r.get("train_gain_lo", &d->train_gain_lo);
  r.get("train_gain_hi", &d->train_gain_hi);
  r.get("heldout_gain_lo", &d->heldout_gain_lo);
  r.get("heldout_gain_hi", &d->heldout_gain_hi);
  r.get("train_offset", &d->train_offset);
  r.get("heldout_offset", &d->heldout_offset);
  r.get("train_tempo_lo", &d->train_tempo_lo);
  r.get("train_tempo_hi", &d->train_tempo_hi);
  r.get("heldout_tempo_lo", &d->heldout_tempo_lo);
  r.get("heldout_tempo_hi", &d->heldout_tempo_hi);
  r.finish();
}

void read_train(const OrderedJson& j, const std::string& ctx, TrainConfig* t) {
  FieldReader r(j, ctx);
  r.get("lr", &t->lr);
  r.get("epochs", &t->epochs);
  r.get("batch", &t->batch);
  r.get("clip", &t->clip);
  r.get("seed", &t->seed);
  r.finish();
}

void read_adapt(const OrderedJson& j, AdaptConfig* a) {
  FieldReader r(j, "adapt");
  r.get("lr", &a->lr);
  r.get("epochs", &a->epochs);
  r.get("batch", &a->batch);
  r.get("beam_width", &a->beam_width);
  r.get("max_decode_len", &a->max_decode_len);
  r.finish();
}

void read_grid(const OrderedJson& j, GridConfig* g) {
  FieldReader r(j, "grid");
  r.get("methods", &g->methods);
  r.get("kld_weights", &g->kld_weights);
  r.get("asa_weights", &g->asa_weights);
  r.get("mtl_weights", &g->mtl_weights);
  r.get("sizes", &g->sizes);
  r.get("supervision", &g->supervision);
  r.get("seeds", &g->seeds);
  r.finish();
}

OrderedJson model_json(const ModelConfig& m) {
  OrderedJson j;
  j["enc_layers"] = m.enc_layers;
  j["enc_width"] = m.enc_width;
  j["d_model"] = m.d_model;
  j["d_att"] = m.d_att;
  j["dec_layers"] = m.dec_layers;
  j["char_dec_layers"] = m.char_dec_layers;
  j["ln_eps"] = m.ln_eps;
  j["init_scale"] = m.init_scale;
  return j;
}

OrderedJson data_json(const DataConfig& d) {
  OrderedJson j;
  j["n_units"] = d.n_units;
  j["n_letters"] = d.n_letters;
  j["unit_min_len"] = d.unit_min_len;
  j["unit_max_len"] = d.unit_max_len;
  j["zipf_exponent"] = d.zipf_exponent;
  j["raw_dim"] = d.raw_dim;
  j["stack"] = d.stack;
  j["stride"] = d.stride;
  j["utt_min_units"] = d.utt_min_units;
  j["utt_max_units"] = d.utt_max_units;
  j["dur_min"] = d.dur_min;
  j["dur_max"] = d.dur_max;
  j["train_speakers"] = d.train_speakers;
  j["heldout_speakers"] = d.heldout_speakers;
  j["train_utts_per_speaker"] = d.train_utts_per_speaker;
  j["matched_test_per_speaker"] = d.matched_test_per_speaker;
  j["adapt_utts"] = d.adapt_utts;
  j["test_utts"] = d.test_utts;
  j["train_noise"] = d.train_noise;
  j["heldout_noise"] = d.heldout_noise;
  j["train_warp"] = d.train_warp;
  j["heldout_warp"] = d.heldout_warp;
  j["train_gain_lo"] = d.train_gain_lo;
  j["train_gain_hi"] = d.train_gain_hi;
  j["heldout_gain_lo"] = d.heldout_gain_lo;
  j["heldout_gain_hi"] = d.heldout_gain_hi;
  j["train_offset"] = d.train_offset;
  j["heldout_offset"] = d.heldout_offset;
  j["train_tempo_lo"] = d.train_tempo_lo;
  j["train_tempo_hi"] = d.train_tempo_hi;
  j["heldout_tempo_lo"] = d.heldout_tempo_lo;
  j["heldout_tempo_hi"] = d.heldout_tempo_hi;
  return j;
}

OrderedJson train_json(const TrainConfig& t) {
  OrderedJson j;
  j["lr"] = t.lr;
  j["epochs"] = t.epochs;
  j["batch"] = t.batch;
  j["clip"] = t.clip;
  j["seed"] = t.seed;
  return j;
}

OrderedJson adapt_json(const AdaptConfig& a) {
  OrderedJson j;
  j["lr"] = a.lr;
  j["epochs"] = a.epochs;
  j["batch"] = a.batch;
  j["beam_width"] = a.beam_width;
  j["max_decode_len"] = a.max_decode_len;
  return j;
}

OrderedJson grid_json(const GridConfig& g) {
  OrderedJson j;
  j["methods"] = g.methods;
  j["kld_weights"] = g.kld_weights;
  j["asa_weights"] = g.asa_weights;
  j["mtl_weights"] = g.mtl_weights;
  j["sizes"] = g.sizes;
  j["supervision"] = g.supervision;
  j["seeds"] = g.seeds;
  return j;
}

void validate(const Config& c) {
  AED_CHECK_USAGE(c.model.enc_layers >= 1 && c.model.dec_layers >= 1 &&
                      c.model.char_dec_layers >= 1,
                  "config: layer counts must be >= 1");
  AED_CHECK_USAGE(c.model.enc_width >= 2 && c.model.d_model >= 2 &&
                      c.model.d_att >= 1,
                  "config: widths too small");
  AED_CHECK_USAGE(c.data.n_units >= 1 && c.data.n_letters >= 1 &&
                      c.data.n_letters <= 26,
                  "config: bad lexicon sizes");
  AED_CHECK_USAGE(c.data.stack >= 1 && c.data.stride >= 1,
                  "config: stack and stride must be >= 1");
  AED_CHECK_USAGE(c.data.train_speakers >= 2 && c.data.heldout_speakers >= 1,
                  "config: need >= 2 training and >= 1 held-out speakers");
  AED_CHECK_USAGE(c.data.utt_min_units >= 1 &&
                      c.data.utt_max_units >= c.data.utt_min_units,
                  "config: bad utterance length range");
  AED_CHECK_USAGE(c.adapt.beam_width >= 1 && c.adapt.max_decode_len >= 1,
                  "config: bad decode settings");
  for (const std::string& m : c.grid.methods)
    AED_CHECK_USAGE(m == "kld" || m == "asa" || m == "mtl",
                    "config: unknown method '" << m << "' in grid");
  for (const std::string& s : c.grid.supervision)
    AED_CHECK_USAGE(s == "sup" || s == "unsup",
                    "config: unknown supervision mode '" << s << "' in grid");
}

}  // namespace

Config default_config() { return Config{}; }

OrderedJson to_json(const Config& c) {
  OrderedJson j;
  j["model"] = model_json(c.model);
  j["data"] = data_json(c.data);
  j["train_si"] = train_json(c.train_si);
  j["train_char"] = train_json(c.train_char);
  j["adapt"] = adapt_json(c.adapt);
  j["grid"] = grid_json(c.grid);
  return j;
}

Config config_from_json(const OrderedJson& j) {
  AED_CHECK_USAGE(j.is_object(), "config: top level must be an object");
  static const std::set<std::string> known = {"model",      "data",  "train_si",
                                              "train_char", "adapt", "grid"};
  for (auto it = j.begin(); it != j.end(); ++it)
    AED_CHECK_USAGE(known.count(it.key()) > 0,
                    "config: unknown section '" << it.key() << "'");
  Config c;
  if (j.contains("model")) read_model(j.at("model"), &c.model);
  if (j.contains("data")) read_data(j.at("data"), &c.data);
  if (j.contains("train_si")) read_train(j.at("train_si"), "train_si", &c.train_si);
  if (j.contains("train_char"))
    read_train(j.at("train_char"), "train_char", &c.train_char);
  if (j.contains("adapt")) read_adapt(j.at("adapt"), &c.adapt);
  if (j.contains("grid")) read_grid(j.at("grid"), &c.grid);
  validate(c);
  return c;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) AED_THROW(ErrorKind::kIo, "cannot open config file '" << path << "'");
  OrderedJson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    AED_THROW(ErrorKind::kUsage, "config '" << path << "': " << e.what());
  }
  return config_from_json(j);
}

std::string dump_config(const Config& c) { return to_json(c).dump(2) + "\n"; }

void apply_override(Config* c, const std::string& dotted_key,
                    const std::string& json_value) {
  OrderedJson j = to_json(*c);
  OrderedJson* cur = &j;
  std::string rest = dotted_key;
  while (true) {
    const size_t dot = rest.find('.');
    const std::string part = rest.substr(0, dot);
    AED_CHECK_USAGE(cur->is_object() && cur->contains(part),
                    "config: unknown key '" << dotted_key << "'");
    if (dot == std::string::npos) {
      OrderedJson parsed = OrderedJson::parse(json_value, nullptr, false);
      if (parsed.is_discarded()) parsed = json_value;  // bare word -> string
      (*cur)[part] = parsed;
      break;
    }
    cur = &(*cur)[part];
    rest = rest.substr(dot + 1);
  }
  *c = config_from_json(j);
}

}  // namespace io
}  // namespace aedadapt
