#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "hyperpann/energy_models.hpp"
#include "hyperpann/pann.hpp"

namespace hyperpann::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kOperationalError = 2 };

struct ResolvedModel {
  std::unique_ptr<EnergyModel> model;
  std::optional<ArchitectureTag> tag;  // set for calibrated networks
};

/// Catalog name (neo-hooke, mooney-rivlin, sqrt-ogden, quarter-root, mielke),
/// a model file written by `fit`, or an Ogden JSON file
/// {"ogden": [{"mu": ..., "p": ...}, ...]}.
ResolvedModel resolve_model(const std::string& spec);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperpann::cli
