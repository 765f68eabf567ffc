#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperpann/calibrate.hpp"
#include "hyperpann/pann.hpp"

namespace hyperpann {

inline constexpr int kModelFormatVersion = 1;

struct ModelProvenance {
  std::string dataset;
  std::optional<TrainConfig> config;
  std::optional<double> final_mse;
};

/// A calibrated network plus what is needed to reproduce or resume it.
struct ModelFile {
  PannArchitecture architecture;
  ModelProvenance provenance;
  std::optional<OptimizerState> optimizer;
};

nlohmann::json config_to_json(const TrainConfig& cfg);
TrainConfig config_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const ModelFile& model);
/// Throws ParseError on a version mismatch, unknown architecture tag, shape
/// mismatch or an energy offset that does not match the parameters.
ModelFile model_from_json(const nlohmann::json& j);

/// Doubles are written in shortest round-trip form, so save/load is bit-exact.
void save_model(std::ostream& out, const ModelFile& model);
void save_model(const std::filesystem::path& path, const ModelFile& model);
ModelFile load_model(std::istream& in);
ModelFile load_model(const std::filesystem::path& path);
/// As above, and throws ParseError unless the file holds `expected`.
ModelFile load_model(const std::filesystem::path& path, ArchitectureTag expected);

}  // namespace hyperpann
