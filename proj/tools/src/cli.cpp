#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperpann/calibrate.hpp"
#include "hyperpann/dataset.hpp"
#include "hyperpann/errors.hpp"
#include "hyperpann/model_io.hpp"
#include "hyperpann/response.hpp"
#include "hyperpann/verify.hpp"

namespace hyperpann::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kDigits = std::numeric_limits<double>::max_digits10;

struct FitArgs {
  std::string arch;
  std::string data;
  std::string out = "out";
  TrainConfig cfg;
};

struct EvaluateArgs {
  std::string model;
  std::string mode = "all";
  std::string data;
  std::string out;
  double lambda_max = 8.0;
  std::size_t grid = 50;
};

struct VerifyArgs {
  std::string model;
  std::string checks = "hill,tsts-m,ordering,shear,majorization";
  std::string out;
  std::size_t grid = 21;
  double range = kDefaultLogRange;
  std::size_t samples = 1000;
  double gamma_max = 10.0;
  std::uint64_t seed = 0;
};

struct ExtrapolateArgs {
  std::string model;
  std::string mode = "UX";
  std::string out = "out";
  double lambda_max = 100.0;
  int grid = 400;
  bool coeffs = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<DeformationMode> modes_from(const std::string& spec) {
  if (spec == "all") return {kAllModes.begin(), kAllModes.end()};
  std::vector<DeformationMode> modes;
  for (const auto& item : split_list(spec)) {
    const auto m = parse_mode(item);
    if (!m) throw DomainError("unknown mode '" + item + "' (expected UX, BX, PS or all)");
    modes.push_back(*m);
  }
  if (modes.empty()) throw DomainError("no deformation mode given");
  return modes;
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << std::setprecision(kDigits);
  return out;
}

void write_json(const fs::path& path, const nlohmann::json& j) { open_output(path) << j.dump(2) << '\n'; }

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

// ---- fit --------------------------------------------------------------------

int cmd_fit(const FitArgs& args, std::ostream& out) {
  const auto tag = parse_architecture(args.arch);
  if (!tag) throw DomainError("unknown architecture '" + args.arch + "'");
  if (!fs::exists(args.data)) throw ParseError("dataset not found: " + args.data);
  const Dataset data = load_dataset(args.data);
  args.cfg.validate();
  const fs::path dir = prepare_dir(args.out);

  const FitResult result = fit(*tag, data, args.cfg);
  const std::string stem(to_string(*tag));

  ModelFile model{*result.best, {data.name, args.cfg, result.best_mse}, {}};
  save_model(dir / (stem + ".json"), model);

  nlohmann::json summary;
  summary["architecture"] = stem;
  summary["dataset"] = data.name;
  summary["points"] = data.size();
  summary["config"] = config_to_json(args.cfg);
  auto& restarts = summary["restarts"] = nlohmann::json::array();
  for (const auto& r : result.restarts) {
    nlohmann::json j{{"seed", r.seed}, {"failed", r.failed}};
    if (r.failed) {
      j["message"] = r.message;
    } else {
      j["final_mse"] = r.final_mse;
      j["log10_mse"] = std::log10(r.final_mse);
    }
    restarts.push_back(std::move(j));
  }
  summary["best_restart"] = result.best_restart;
  summary["best_mse"] = result.best_mse;
  summary["log10_best_mse"] = result.log10_best_mse;
  write_json(dir / (stem + "-summary.json"), summary);

  auto trace = open_output(dir / (stem + "-trace.csv"));
  trace << "restart,seed,step,loss\n";
  for (std::size_t r = 0; r < result.restarts.size(); ++r) {
    for (const auto& s : result.restarts[r].trace) {
      trace << r << ',' << result.restarts[r].seed << ',' << s.step << ',' << s.loss << '\n';
    }
  }

  for (const auto& r : result.restarts) {
    out << "restart seed " << r.seed << ": ";
    if (r.failed) {
      out << "failed (" << r.message << ")\n";
    } else {
      out << "log10 MSE " << fixed(std::log10(r.final_mse), 3) << '\n';
    }
  }
  out << std::left << std::setw(14) << stem << std::setw(12) << data.name << "log10 MSE "
      << fixed(result.log10_best_mse, 3) << '\n';
  return kSuccess;
}

// ---- evaluate -----------------------------------------------------------------

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err) {
  const ResolvedModel resolved = resolve_model(args.model);
  const EnergyModel& model = *resolved.model;
  Dataset prediction;
  prediction.name = model.name();
  if (!args.data.empty()) {
    if (!fs::exists(args.data)) throw ParseError("dataset not found: " + args.data);
    const Dataset data = load_dataset(args.data);
    for (const auto& p : data.entries) {
      prediction.entries.push_back({p.mode, p.lambda, nominal_stress(model, p.mode, p.lambda).s1});
    }
    err << model.name() << " on " << data.name << ": log10 MSE "
        << fixed(std::log10(mse(model, data)), 4) << '\n';
  } else {
    if (!(args.lambda_max > 1.0)) throw DomainError("--lambda-max must exceed 1");
    if (args.grid < 2) throw DomainError("--grid needs at least 2 points");
    for (const DeformationMode mode : modes_from(args.mode)) {
      for (std::size_t i = 0; i < args.grid; ++i) {
        const double lambda =
            1.0 + (args.lambda_max - 1.0) * static_cast<double>(i) / static_cast<double>(args.grid - 1);
        prediction.entries.push_back({mode, lambda, nominal_stress(model, mode, lambda).s1});
      }
    }
  }
  if (args.out.empty()) {
    write_dataset(out, prediction);
  } else {
    auto file = open_output(prepare_dir(args.out) / "evaluate.csv");
    write_dataset(file, prediction);
  }
  return kSuccess;
}

// ---- verify -------------------------------------------------------------------

std::function<double(double)> closed_form_for(const std::string& spec) {
  if (spec == "quarter-root") return quarter_root_shear_stress;
  if (spec == "sqrt-ogden") return sqrt_ogden_shear_stress;
  return {};
}

void print_report(std::ostream& out, const VerificationReport& r) {
  out << std::left << std::setw(18) << r.check << (r.passed ? "pass" : "FAIL") << "  (" << r.evaluated
      << " evaluated";
  if (!r.passed) out << ", " << r.witnesses.size() << " violations";
  out << ")\n";
  for (const auto& [key, value] : r.findings) out << "    " << key << " = " << value << '\n';
  const std::size_t shown = std::min<std::size_t>(r.witnesses.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const Witness& w = r.witnesses[i];
    out << "    witness (";
    for (std::size_t k = 0; k < w.state.size(); ++k) out << (k ? ", " : "") << w.state[k];
    out << ") value " << w.value;
    if (w.marginal) out << " [marginal]";
    if (!w.note.empty()) out << "  " << w.note;
    out << '\n';
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  static const std::vector<std::string> known = {"hill", "tsts-m", "ordering", "shear", "majorization"};
  const auto checks = split_list(args.checks);
  if (checks.empty()) throw DomainError("no checks requested");
  for (const auto& c : checks) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw DomainError("unknown check '" + c + "' (expected hill, tsts-m, ordering, shear, majorization)");
    }
  }
  const bool needs_model = std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c != "majorization"; });
  ResolvedModel resolved;
  if (needs_model) {
    if (args.model.empty()) throw DomainError("--model is required for the requested checks");
    resolved = resolve_model(args.model);
  }

  std::vector<VerificationReport> reports;
  for (const auto& c : checks) {
    if (c == "hill") {
      reports.push_back(hill_grid_check(*resolved.model, {-args.range, args.range, args.grid}));
    } else if (c == "tsts-m") {
      reports.push_back(tsts_m_sample(*resolved.model, args.samples, args.seed, {args.range, 0.0, 0.0}));
    } else if (c == "ordering") {
      reports.push_back(principal_stress_ordering(*resolved.model, args.samples, args.seed, args.range));
    } else if (c == "shear") {
      reports.push_back(
          shear_monotonicity(*resolved.model, args.gamma_max, 10001, closed_form_for(args.model)));
    } else {
      reports.push_back(majorization_suite(args.samples, args.seed));
    }
  }

  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) {
    print_report(out, r);
    all = all && r.passed;
    j.push_back(r.to_json());
  }
  if (!args.out.empty()) write_json(prepare_dir(args.out) / "verify.json", j);
  out << (all ? "all checks passed" : "verification failed") << '\n';
  return all ? kSuccess : kCheckFailed;
}

// ---- extrapolate / coeffs -------------------------------------------------------

void write_coefficients(const fs::path& path, const PannArchitecture& arch, double lambda_max, int per_decade) {
  const auto grid = geometric_grid(1.0, lambda_max, per_decade);
  const CoefficientTrace trace = coefficient_trace(arch, grid);
  auto file = open_output(path);
  file << "lambda,c1,c2,d1,d2,cauchy\n";
  for (std::size_t i = 0; i < trace.lambda.size(); ++i) {
    file << trace.lambda[i] << ',' << trace.c1[i] << ',' << trace.c2[i] << ',' << trace.d1[i] << ','
         << trace.d2[i] << ',' << trace.cauchy[i] << '\n';
  }
}

const PannArchitecture& invariant_architecture(const ResolvedModel& resolved) {
  if (!resolved.tag || !is_invariant_based(*resolved.tag)) {
    throw ContractViolation("coefficient trace is defined only for invariant architectures (pann-i, pann-sqrt-i)");
  }
  return static_cast<const PannArchitecture&>(*resolved.model);
}

int cmd_extrapolate(const ExtrapolateArgs& args, std::ostream& out) {
  const ResolvedModel resolved = resolve_model(args.model);
  if (args.coeffs) invariant_architecture(resolved);
  if (!(args.lambda_max > 1.0)) throw DomainError("--lambda-max must exceed 1");
  if (args.grid < 1) throw DomainError("--grid must be positive");
  const fs::path dir = prepare_dir(args.out);

  nlohmann::json summary = nlohmann::json::array();
  for (const DeformationMode mode : modes_from(args.mode)) {
    const ExtrapolationReport report = extrapolation_report(*resolved.model, mode, args.lambda_max, args.grid);
    const std::string tag(to_string(mode));
    auto file = open_output(dir / ("extrapolate-" + tag + ".csv"));
    file << "lambda,s1,cauchy,dsigma,d2sigma\n";
    for (const auto& row : report.rows) {
      file << row.lambda << ',' << row.s1 << ',' << row.cauchy << ',' << row.dsigma << ',' << row.d2sigma << '\n';
    }
    summary.push_back({{"model", resolved.model->name()},
                       {"mode", tag},
                       {"lambda_max", args.lambda_max},
                       {"per_decade", args.grid},
                       {"monotone", report.monotone},
                       {"largest_drop", report.largest_drop},
                       {"curvature_sign_changes", report.curvature_sign_changes}});
    out << tag << ": " << (report.monotone ? "monotone" : "NOT monotone") << ", largest drop "
        << report.largest_drop << " MPa, curvature sign changes at lambda =";
    if (report.curvature_sign_changes.empty()) out << " (none)";
    for (double l : report.curvature_sign_changes) out << ' ' << fixed(l, 3);
    out << '\n';
  }
  write_json(dir / "extrapolate-summary.json", summary);
  if (args.coeffs) {
    write_coefficients(dir / "coefficients.csv", invariant_architecture(resolved), args.lambda_max, args.grid);
  }
  return kSuccess;
}

int cmd_coeffs(const ExtrapolateArgs& args, std::ostream& out) {
  const ResolvedModel resolved = resolve_model(args.model);
  const PannArchitecture& arch = invariant_architecture(resolved);
  if (!(args.lambda_max > 1.0)) throw DomainError("--lambda-max must exceed 1");
  const fs::path path = prepare_dir(args.out) / "coefficients.csv";
  write_coefficients(path, arch, args.lambda_max, args.grid);
  out << "wrote " << path.string() << '\n';
  return kSuccess;
}

}  // namespace

ResolvedModel resolve_model(const std::string& spec) {
  ResolvedModel r;
  if (spec == "neo-hooke") {
    r.model = neo_hooke(1.0);
  } else if (spec == "mooney-rivlin") {
    r.model = mooney_rivlin(0.4, -0.1);
  } else if (spec == "sqrt-ogden") {
    r.model = sqrt_ogden();
  } else if (spec == "quarter-root") {
    r.model = quarter_root_model();
  } else if (spec == "mielke") {
    r.model = mielke_model();
  } else {
    if (!fs::exists(spec)) {
      throw ParseError("unknown model '" + spec +
                       "' (not a file; catalog: neo-hooke, mooney-rivlin, sqrt-ogden, quarter-root, mielke)");
    }
    std::ifstream in(spec);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(spec + ": not valid JSON: " + e.what());
    }
    if (j.contains("ogden")) {
      OgdenParams params;
      for (const auto& term : j.at("ogden")) {
        params.terms.push_back({term.at("mu").get<double>(), term.at("p").get<double>()});
      }
      r.model = ogden(std::move(params));
    } else {
      ModelFile file = model_from_json(j);
      r.tag = file.architecture.tag();
      r.model = std::make_unique<PannArchitecture>(std::move(file.architecture));
    }
  }
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calibrate and verify physics-augmented neural-network hyperelastic models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hyperpann 0.1.0");

  FitArgs fit_args;
  auto* fit_cmd = app.add_subcommand("fit", "Calibrate an architecture to a stretch-stress dataset");
  fit_cmd->add_option("--arch", fit_args.arch, "pann-i, pann-sqrt-i, pann-lambda or pann-nu")->required();
  fit_cmd->add_option("--data", fit_args.data, "CSV dataset (mode,lambda,s1)")->required();
  fit_cmd->add_option("--steps", fit_args.cfg.steps, "Adam steps per restart")->capture_default_str();
  fit_cmd->add_option("--lr", fit_args.cfg.learning_rate, "Learning rate")->capture_default_str();
  fit_cmd->add_option("--batch", fit_args.cfg.batch_size, "Minibatch size, 0 for full batch")->capture_default_str();
  fit_cmd->add_option("--restarts", fit_args.cfg.restarts, "Independent initializations")->capture_default_str();
  fit_cmd->add_option("--nodes", fit_args.cfg.nodes, "Hidden nodes")->capture_default_str();
  fit_cmd->add_option("--seed", fit_args.cfg.seed, "Seed of the first restart")->capture_default_str();
  fit_cmd->add_option("--out", fit_args.out, "Output directory")->capture_default_str();

  EvaluateArgs eval_args;
  auto* eval_cmd = app.add_subcommand("evaluate", "Nominal stress on the canonical load paths");
  eval_cmd->add_option("--model", eval_args.model, "Catalog name or model file")->required();
  eval_cmd->add_option("--mode", eval_args.mode, "UX, BX, PS, a comma list or all")->capture_default_str();
  eval_cmd->add_option("--data", eval_args.data, "Evaluate at the stretches of this dataset instead of a grid");
  eval_cmd->add_option("--lambda-max", eval_args.lambda_max, "Largest stretch")->capture_default_str();
  eval_cmd->add_option("--grid", eval_args.grid, "Points per mode")->capture_default_str();
  eval_cmd->add_option("--out", eval_args.out, "Output directory (stdout when omitted)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check constitutive inequalities");
  verify_cmd->add_option("--model", verify_args.model, "Catalog name or model file");
  verify_cmd->add_option("--checks", verify_args.checks, "Comma list of checks")->capture_default_str();
  verify_cmd->add_option("--grid", verify_args.grid, "Hill grid points per axis")->capture_default_str();
  verify_cmd->add_option("--range", verify_args.range, "Log-stretch half range")->capture_default_str();
  verify_cmd->add_option("--samples", verify_args.samples, "Random states, pairs or trials")->capture_default_str();
  verify_cmd->add_option("--gamma-max", verify_args.gamma_max, "Largest shear")->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--out", verify_args.out, "Directory for verify.json");

  ExtrapolateArgs extra_args;
  auto* extra_cmd = app.add_subcommand("extrapolate", "Cauchy stress far beyond the data range");
  extra_cmd->add_option("--model", extra_args.model, "Catalog name or model file")->required();
  extra_cmd->add_option("--mode", extra_args.mode, "UX, BX, PS, a comma list or all")->capture_default_str();
  extra_cmd->add_option("--lambda-max", extra_args.lambda_max, "Largest stretch")->capture_default_str();
  extra_cmd->add_option("--grid", extra_args.grid, "Points per decade")->capture_default_str();
  extra_cmd->add_option("--out", extra_args.out, "Output directory")->capture_default_str();
  extra_cmd->add_flag("--coeffs", extra_args.coeffs, "Also write the UX stress-coefficient trace");

  ExtrapolateArgs coeff_args;
  auto* coeff_cmd = app.add_subcommand("coeffs", "UX stress-coefficient trace of an invariant architecture");
  coeff_cmd->add_option("--model", coeff_args.model, "Model file")->required();
  coeff_cmd->add_option("--lambda-max", coeff_args.lambda_max, "Largest stretch")->capture_default_str();
  coeff_cmd->add_option("--grid", coeff_args.grid, "Points per decade")->capture_default_str();
  coeff_cmd->add_option("--out", coeff_args.out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kOperationalError;
  }

  try {
    if (*fit_cmd) return cmd_fit(fit_args, out);
    if (*eval_cmd) return cmd_evaluate(eval_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*extra_cmd) return cmd_extrapolate(extra_args, out);
    if (*coeff_cmd) return cmd_coeffs(coeff_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOperationalError;
  }
  return kOperationalError;
}

}  // namespace hyperpann::cli
