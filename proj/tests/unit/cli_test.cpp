#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "hyperpann/calibrate.hpp"
#include "hyperpann/dataset.hpp"
#include "hyperpann/model_io.hpp"
#include "test_support.hpp"

using namespace hyperpann;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperpann");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hyperpann-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, HelpSucceeds) {
  EXPECT_EQ(invoke({"--help"}).code, cli::kSuccess);
}

TEST_F(CliTest, UnknownOptionIsOperationalError) {
  EXPECT_EQ(invoke({"verify", "--bogus"}).code, cli::kOperationalError);
  EXPECT_EQ(invoke({"fit", "--arch", "pann-i"}).code, cli::kOperationalError);
  EXPECT_EQ(invoke({}).code, cli::kOperationalError);
}

TEST_F(CliTest, VerifyPassingModel) {
  const auto r = invoke({"verify", "--model", "neo-hooke", "--checks", "hill,tsts-m,ordering,shear",
                         "--grid", "9", "--samples", "200", "--out", dir_.string()});
  EXPECT_EQ(r.code, cli::kSuccess) << r.out << r.err;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  std::ifstream in(dir_ / "verify.json");
  const auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["check"], "hill");
  EXPECT_EQ(j[0]["verdict"], "pass");
}

TEST_F(CliTest, VerifyFailingCheckExitsOne) {
  const auto r = invoke({"verify", "--model", "quarter-root", "--checks", "shear"});
  EXPECT_EQ(r.code, cli::kCheckFailed);
  EXPECT_NE(r.out.find("peak_gamma"), std::string::npos);
  EXPECT_NE(r.out.find("verification failed"), std::string::npos);
}

TEST_F(CliTest, VerifyMajorizationNeedsNoModel) {
  EXPECT_EQ(invoke({"verify", "--checks", "majorization", "--samples", "100"}).code, cli::kSuccess);
  EXPECT_EQ(invoke({"verify", "--checks", "hill"}).code, cli::kOperationalError);
  EXPECT_EQ(invoke({"verify", "--model", "neo-hooke", "--checks", "convexity"}).code, cli::kOperationalError);
}

TEST_F(CliTest, UnknownModelIsOperationalError) {
  const auto r = invoke({"evaluate", "--model", "no-such-model"});
  EXPECT_EQ(r.code, cli::kOperationalError);
  EXPECT_NE(r.err.find("no-such-model"), std::string::npos);
}

TEST_F(CliTest, MissingDatasetNamesThePath) {
  const std::string missing = (dir_ / "absent.csv").string();
  const auto r = invoke({"fit", "--arch", "pann-i", "--data", missing, "--out", dir_.string()});
  EXPECT_EQ(r.code, cli::kOperationalError);
  EXPECT_NE(r.err.find(missing), std::string::npos);
}

TEST_F(CliTest, MalformedDatasetNamesThePath) {
  const fs::path bad = dir_ / "bad.csv";
  std::ofstream(bad) << "mode,lambda,s1\nUX,abc,1\n";
  const auto r = invoke({"fit", "--arch", "pann-i", "--data", bad.string(), "--out", dir_.string()});
  EXPECT_EQ(r.code, cli::kOperationalError);
  EXPECT_NE(r.err.find(bad.string()), std::string::npos);
}

TEST_F(CliTest, FitWithoutStepsKeepsInitialLoss) {
  const std::string data = support::data_path("treloar.csv");
  const auto r = invoke({"fit", "--arch", "pann-sqrt-i", "--data", data, "--steps", "0", "--restarts", "2",
                         "--nodes", "4", "--seed", "3", "--out", dir_.string()});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;

  const Dataset d = load_dataset(data);
  const double a = mse(build_architecture(ArchitectureTag::PANN_SQRT_I, 4, 3), d);
  const double b = mse(build_architecture(ArchitectureTag::PANN_SQRT_I, 4, 4), d);
  std::ifstream in(dir_ / "pann-sqrt-i-summary.json");
  const auto summary = nlohmann::json::parse(in);
  EXPECT_NEAR(summary["best_mse"].get<double>(), std::min(a, b), 1e-12 * std::min(a, b));
  EXPECT_EQ(summary["restarts"].size(), 2u);

  const ModelFile m = load_model(dir_ / "pann-sqrt-i.json", ArchitectureTag::PANN_SQRT_I);
  EXPECT_NEAR(mse(m.architecture, d), std::min(a, b), 1e-12 * std::min(a, b));
  EXPECT_TRUE(fs::exists(dir_ / "pann-sqrt-i-trace.csv"));
  EXPECT_NE(r.out.find("pann-sqrt-i"), std::string::npos);
}

TEST_F(CliTest, FitThenVerifyModelFile) {
  const std::string data = support::data_path("treloar.csv");
  ASSERT_EQ(invoke({"fit", "--arch", "pann-i", "--data", data, "--steps", "50", "--restarts", "1", "--nodes",
                    "4", "--out", dir_.string()})
                .code,
            cli::kSuccess);
  const auto r = invoke({"verify", "--model", (dir_ / "pann-i.json").string(), "--checks", "tsts-m",
                         "--samples", "100"});
  EXPECT_NE(r.code, cli::kOperationalError) << r.err;
}

TEST_F(CliTest, EvaluateRoundTripsThroughParser) {
  const auto r = invoke({"evaluate", "--model", "mooney-rivlin", "--mode", "UX,PS", "--grid", "5",
                         "--lambda-max", "3"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  std::istringstream in(r.out);
  const Dataset d = parse_dataset(in, "eval");
  ASSERT_EQ(d.size(), 10u);
  // Mooney-Rivlin(0.4, -0.1) oracle values, tests/oracles/derive_values.py
  bool ux = false, ps = false;
  for (const auto& p : d.entries) {
    if (p.mode == DeformationMode::UX && p.lambda == 2.0) {
      EXPECT_NEAR(p.s1, 0.7875, 1e-12);
      ux = true;
    }
    if (p.mode == DeformationMode::PS && p.lambda == 3.0) {
      EXPECT_NEAR(p.s1, 1.4814814814814815, 1e-12);
      ps = true;
    }
  }
  EXPECT_TRUE(ux && ps);
}

TEST_F(CliTest, EvaluateAgainstDatasetReportsMse) {
  const auto r = invoke({"evaluate", "--model", "neo-hooke", "--data", support::data_path("treloar.csv")});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.err.find("log10 MSE"), std::string::npos);
  std::istringstream in(r.out);
  EXPECT_EQ(parse_dataset(in, "eval").size(), 56u);
}

TEST_F(CliTest, ExtrapolateWritesCurves) {
  const auto r = invoke({"extrapolate", "--model", "neo-hooke", "--mode", "UX", "--lambda-max", "10", "--grid",
                         "50", "--out", dir_.string()});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "extrapolate-UX.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "extrapolate-summary.json"));
  EXPECT_NE(r.out.find("UX: monotone"), std::string::npos);
}

TEST_F(CliTest, CoefficientsRequireInvariantArchitecture) {
  const fs::path model = dir_ / "lambda.json";
  save_model(model, ModelFile{build_architecture(ArchitectureTag::PANN_LAMBDA, 4, 0), {}, {}});
  const auto r = invoke({"extrapolate", "--model", model.string(), "--coeffs", "--out", dir_.string()});
  EXPECT_EQ(r.code, cli::kOperationalError);
  EXPECT_EQ(invoke({"coeffs", "--model", model.string(), "--out", dir_.string()}).code, cli::kOperationalError);

  const fs::path inv = dir_ / "inv.json";
  save_model(inv, ModelFile{build_architecture(ArchitectureTag::PANN_I, 4, 0), {}, {}});
  EXPECT_EQ(invoke({"coeffs", "--model", inv.string(), "--lambda-max", "10", "--out", dir_.string()}).code,
            cli::kSuccess);
  EXPECT_TRUE(fs::exists(dir_ / "coefficients.csv"));
}

TEST_F(CliTest, OgdenJsonModel) {
  const fs::path spec = dir_ / "ogden.json";
  std::ofstream(spec) << R"({"ogden": [{"mu": 0.5, "p": 2.0}]})";
  EXPECT_EQ(invoke({"verify", "--model", spec.string(), "--checks", "hill", "--grid", "5"}).code, cli::kSuccess);
}
