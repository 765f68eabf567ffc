#include "hyperpann/model_io.hpp"

#include <cmath>
#include <fstream>

#include "hyperpann/errors.hpp"

namespace hyperpann {

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("model file lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("model file field '") + key + "' has the wrong type");
  }
}

}  // namespace

nlohmann::json config_to_json(const TrainConfig& cfg) {
  return {{"learning_rate", cfg.learning_rate}, {"steps", cfg.steps},     {"batch_size", cfg.batch_size},
          {"restarts", cfg.restarts},           {"nodes", cfg.nodes},     {"seed", cfg.seed},
          {"beta1", cfg.beta1},                 {"beta2", cfg.beta2},     {"epsilon", cfg.epsilon},
          {"trace_interval", cfg.trace_interval}};
}

TrainConfig config_from_json(const nlohmann::json& j) {
  TrainConfig cfg;
  cfg.learning_rate = j.value("learning_rate", cfg.learning_rate);
  cfg.steps = j.value("steps", cfg.steps);
  cfg.batch_size = j.value("batch_size", cfg.batch_size);
  cfg.restarts = j.value("restarts", cfg.restarts);
  cfg.nodes = j.value("nodes", cfg.nodes);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.beta1 = j.value("beta1", cfg.beta1);
  cfg.beta2 = j.value("beta2", cfg.beta2);
  cfg.epsilon = j.value("epsilon", cfg.epsilon);
  cfg.trace_interval = j.value("trace_interval", cfg.trace_interval);
  return cfg;
}

nlohmann::json model_to_json(const ModelFile& model) {
  const PannArchitecture& arch = model.architecture;
  const auto raw = arch.params().raw();
  nlohmann::json j;
  j["format_version"] = kModelFormatVersion;
  j["architecture_tag"] = std::string(to_string(arch.tag()));
  j["n"] = arch.params().nodes();
  j["constraint_mode"] = std::string(to_string(arch.params().mode()));
  j["raw_parameters"] = std::vector<double>(raw.begin(), raw.end());
  j["energy_offset"] = arch.energy_offset();
  nlohmann::json prov = nlohmann::json::object();
  prov["dataset"] = model.provenance.dataset;
  if (model.provenance.config) prov["config"] = config_to_json(*model.provenance.config);
  if (model.provenance.final_mse) prov["final_mse"] = *model.provenance.final_mse;
  j["provenance"] = std::move(prov);
  if (model.optimizer) {
    const OptimizerState& s = *model.optimizer;
    j["optimizer"] = {{"step", s.step},
                      {"first_moment", s.first_moment},
                      {"second_moment", s.second_moment},
                      {"rng_state", s.rng_state}};
  }
  return j;
}

ModelFile model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("model file is not a JSON object");
  const int version = field<int>(j, "format_version");
  if (version != kModelFormatVersion) {
    throw ParseError("unsupported model format version " + std::to_string(version) + " (expected " +
                     std::to_string(kModelFormatVersion) + ")");
  }
  const auto tag_name = field<std::string>(j, "architecture_tag");
  const auto tag = parse_architecture(tag_name);
  if (!tag) throw ParseError("unknown architecture tag '" + tag_name + "'");
  const auto nodes = field<std::size_t>(j, "n");
  const auto mode_name = field<std::string>(j, "constraint_mode");
  const auto mode = parse_constraint_mode(mode_name);
  if (!mode) throw ParseError("unknown constraint mode '" + mode_name + "'");
  if (*mode != constraint_mode(*tag)) {
    throw ParseError("constraint mode " + mode_name + " does not match " + tag_name);
  }
  auto raw = field<std::vector<double>>(j, "raw_parameters");
  const std::size_t m = input_dimension(*tag);
  if (nodes < 1 || raw.size() != nodes * m + 2 * nodes) {
    throw ParseError("raw_parameters has " + std::to_string(raw.size()) + " entries, expected " +
                     std::to_string(nodes * m + 2 * nodes));
  }
  for (double v : raw) {
    if (!std::isfinite(v)) throw ParseError("raw_parameters contains a non-finite value");
  }

  ModelFile out{PannArchitecture(*tag, NetworkParams(nodes, m, *mode, std::move(raw))), {}, {}};
  const double stored = field<double>(j, "energy_offset");
  const double offset = out.architecture.energy_offset();
  if (!(std::abs(stored - offset) <= 1e-12 * std::max(1.0, std::abs(offset)))) {
    throw ParseError("energy_offset does not match the parameters (file corrupted?)");
  }

  if (j.contains("provenance")) {
    const auto& prov = j.at("provenance");
    out.provenance.dataset = prov.value("dataset", std::string());
    if (prov.contains("config")) out.provenance.config = config_from_json(prov.at("config"));
    if (prov.contains("final_mse") && prov.at("final_mse").is_number()) {
      out.provenance.final_mse = prov.at("final_mse").get<double>();
    }
  }
  if (j.contains("optimizer")) {
    const auto& o = j.at("optimizer");
    OptimizerState s;
    s.step = field<std::uint64_t>(o, "step");
    s.first_moment = field<std::vector<double>>(o, "first_moment");
    s.second_moment = field<std::vector<double>>(o, "second_moment");
    s.rng_state = o.value("rng_state", std::string());
    const std::size_t count = out.architecture.params().parameter_count();
    if (s.first_moment.size() != count || s.second_moment.size() != count) {
      throw ParseError("optimizer state does not match the network size");
    }
    out.optimizer = std::move(s);
  }
  return out;
}

void save_model(std::ostream& out, const ModelFile& model) { out << model_to_json(model).dump(2) << '\n'; }

void save_model(const std::filesystem::path& path, const ModelFile& model) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write model file " + path.string());
  save_model(out, model);
  if (!out) throw ParseError("failed writing model file " + path.string());
}

ModelFile load_model(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path.string());
  try {
    return load_model(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ModelFile load_model(const std::filesystem::path& path, ArchitectureTag expected) {
  ModelFile model = load_model(path);
  if (model.architecture.tag() != expected) {
    throw ParseError(path.string() + ": holds " + std::string(to_string(model.architecture.tag())) +
                     ", expected " + std::string(to_string(expected)));
  }
  return model;
}

}  // namespace hyperpann
