// Copyright 2026 The robustid Authors
// SPDX-License-Identifier: Apache-2.0

#include "robustid/config.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "robustid/error.hpp"

namespace robustid {
namespace {

using nlohmann::json;

void allow_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : keys) ok = ok || key == k;
    if (!ok) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

template <class T>
T get_or(const json& obj, const char* key, T fallback, const std::string& where) {
  return obj.contains(key) ? get<T>(obj, key, where) : fallback;
}

InputDistribution parse_input(const json& j) {
  const std::string where = "scenario.input";
  const auto kind = get<std::string>(j, "kind", where);
  if (kind == "gaussian") {
    allow_keys(j, where, {"kind", "sigma"});
    return GaussianInput{get_or<double>(j, "sigma", 1.0, where)};
  }
  if (kind == "bernoulli") {
    allow_keys(j, where, {"kind"});
    return BernoulliInput{};
  }
  throw ConfigError(where + ": unknown kind '" + kind + "'");
}

ParameterSource parse_x_source(const json& j) {
  const std::string where = "scenario.x_source";
  const auto kind = get<std::string>(j, "kind", where);
  if (kind == "gaussian_random") {
    allow_keys(j, where, {"kind"});
    return GaussianParameters{};
  }
  if (kind == "fixed") {
    allow_keys(j, where, {"kind", "vector"});
    return FixedParameters{get<std::vector<double>>(j, "vector", where)};
  }
  throw ConfigError(where + ": unknown kind '" + kind + "'");
}

NoiseKind parse_noise(const json& j) {
  const std::string where = "scenario.noise";
  const auto kind = get<std::string>(j, "kind", where);
  NoiseKind out;
  if (kind == "none") {
    allow_keys(j, where, {"kind"});
    out = NoNoise{};
  } else if (kind == "gaussian") {
    allow_keys(j, where, {"kind", "sigma"});
    out = GaussianNoise{get<double>(j, "sigma", where)};
  } else if (kind == "gamma") {
    allow_keys(j, where, {"kind", "shape", "scale"});
    out = GammaNoise{get<double>(j, "shape", where), get<double>(j, "scale", where)};
  } else if (kind == "exponential") {
    allow_keys(j, where, {"kind", "mean"});
    out = ExponentialNoise{get<double>(j, "mean", where)};
  } else {
    throw ConfigError(where + ": unknown kind '" + kind + "'");
  }
  // Reject non-positive parameters here rather than mid-sweep.
  try {
    (void)sample_noise(NoiseSpec{out, 0}, 1);
  } catch (const SpecError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return out;
}

OutlierSpec parse_outliers(const json& j) {
  const std::string where = "scenario.outliers";
  allow_keys(j, where, {"count_model", "magnitude"});
  OutlierSpec spec;
  const json& cm = j.contains("count_model") ? j.at("count_model") : json::object();
  const std::string cwhere = where + ".count_model";
  const auto kind = get_or<std::string>(cm, "kind", "fixed", cwhere);
  if (kind == "fixed") {
    allow_keys(cm, cwhere, {"kind", "k"});
    spec.count = FixedCount{get_or<std::size_t>(cm, "k", 0, cwhere)};
  } else if (kind == "fraction") {
    allow_keys(cm, cwhere, {"kind", "fraction"});
    spec.count = FixedFraction{get<double>(cm, "fraction", cwhere)};
  } else if (kind == "uniform_fraction") {
    allow_keys(cm, cwhere, {"kind", "max_fraction"});
    spec.count = UniformFraction{get<double>(cm, "max_fraction", cwhere)};
  } else {
    throw ConfigError(cwhere + ": unknown kind '" + kind + "'");
  }
  if (j.contains("magnitude")) {
    const json& mg = j.at("magnitude");
    const std::string mwhere = where + ".magnitude";
    allow_keys(mg, mwhere, {"kind", "mean", "sd"});
    if (get_or<std::string>(mg, "kind", "gaussian", mwhere) != "gaussian") {
      throw ConfigError(mwhere + ": only gaussian magnitudes are supported");
    }
    spec.magnitude = GaussianMagnitude{get_or<double>(mg, "mean", 0.0, mwhere),
                                       get_or<double>(mg, "sd", 1.0, mwhere)};
  }
  try {
    const auto* fixed = std::get_if<FixedCount>(&spec.count);
    (void)draw_outliers(spec, fixed ? std::max<std::size_t>(fixed->k, 1) : 1000);
  } catch (const SpecError& e) {
    throw ConfigError(where + ": " + e.what());
  }
  return spec;
}

Scenario parse_scenario(const json& j) {
  const std::string where = "scenario";
  allow_keys(j, where,
             {"id", "n", "m", "input", "x_source", "noise", "outliers", "estimators"});
  Scenario s;
  s.id = get_or<std::string>(j, "id", s.id, where);
  s.n = get_or<std::size_t>(j, "n", s.n, where);
  s.m = get_or<std::size_t>(j, "m", s.m, where);
  if (j.contains("input")) s.input = parse_input(j.at("input"));
  if (j.contains("x_source")) s.x_source = parse_x_source(j.at("x_source"));
  if (j.contains("noise")) s.noise.kind = parse_noise(j.at("noise"));
  if (j.contains("outliers")) s.outliers = parse_outliers(j.at("outliers"));
  if (j.contains("estimators")) {
    s.estimators.clear();
    for (const auto& name : get<std::vector<std::string>>(j, "estimators", where)) {
      if (name == "lad") {
        s.estimators.push_back(Method::kLad);
      } else if (name == "ls") {
        s.estimators.push_back(Method::kLs);
      } else {
        throw ConfigError(where + ".estimators: unknown estimator '" + name + "'");
      }
    }
  }
  return s;
}

json noise_to_json(const NoiseKind& k) {
  json j;
  j["kind"] = std::string(noise_kind_name(k));
  if (const auto* g = std::get_if<GaussianNoise>(&k)) j["sigma"] = g->sigma;
  if (const auto* g = std::get_if<GammaNoise>(&k)) {
    j["shape"] = g->shape;
    j["scale"] = g->scale;
  }
  if (const auto* e = std::get_if<ExponentialNoise>(&k)) j["mean"] = e->mean;
  return j;
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  allow_keys(doc, "config",
             {"scenario", "n_grid", "trials_per_point", "master_seed", "output", "trials_output",
              "threads"});
  ExperimentConfig cfg;
  cfg.scenario = parse_scenario(doc.contains("scenario") ? doc.at("scenario") : json::object());
  cfg.n_grid = get_or<std::vector<std::size_t>>(doc, "n_grid", {cfg.scenario.n}, "config");
  cfg.trials_per_point = get_or<std::size_t>(doc, "trials_per_point", 10, "config");
  cfg.master_seed = get_or<std::uint64_t>(doc, "master_seed", 1, "config");
  cfg.output = get_or<std::string>(doc, "output", "", "config");
  cfg.trials_output = get_or<std::string>(doc, "trials_output", "", "config");
  cfg.threads = get_or<std::size_t>(doc, "threads", 0, "config");
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return parse_config(doc);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

json to_json(const ExperimentConfig& cfg) {
  const Scenario& s = cfg.scenario;
  json sc;
  sc["id"] = s.id;
  sc["n"] = s.n;
  sc["m"] = s.m;
  if (const auto* g = std::get_if<GaussianInput>(&s.input)) {
    sc["input"] = {{"kind", "gaussian"}, {"sigma", g->sigma}};
  } else {
    sc["input"] = {{"kind", "bernoulli"}};
  }
  if (const auto* f = std::get_if<FixedParameters>(&s.x_source)) {
    sc["x_source"] = {{"kind", "fixed"}, {"vector", f->values}};
  } else {
    sc["x_source"] = {{"kind", "gaussian_random"}};
  }
  sc["noise"] = noise_to_json(s.noise.kind);
  json cm;
  if (const auto* c = std::get_if<FixedCount>(&s.outliers.count)) {
    cm = {{"kind", "fixed"}, {"k", c->k}};
  } else if (const auto* c = std::get_if<FixedFraction>(&s.outliers.count)) {
    cm = {{"kind", "fraction"}, {"fraction", c->fraction}};
  } else if (const auto* c = std::get_if<UniformFraction>(&s.outliers.count)) {
    cm = {{"kind", "uniform_fraction"}, {"max_fraction", c->max_fraction}};
  }
  sc["outliers"] = {{"count_model", cm},
                    {"magnitude",
                     {{"kind", "gaussian"},
                      {"mean", s.outliers.magnitude.mean},
                      {"sd", s.outliers.magnitude.sd}}}};
  json est = json::array();
  for (Method m : s.estimators) est.push_back(std::string(method_name(m)));
  sc["estimators"] = est;

  json doc;
  doc["scenario"] = sc;
  doc["n_grid"] = cfg.n_grid;
  doc["trials_per_point"] = cfg.trials_per_point;
  doc["master_seed"] = cfg.master_seed;
  doc["output"] = cfg.output;
  doc["trials_output"] = cfg.trials_output;
  doc["threads"] = cfg.threads;
  return doc;
}

}  // namespace robustid
