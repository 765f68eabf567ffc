#include <gtest/gtest.h>

#include <sstream>

#include "hyperpann/dataset.hpp"
#include "hyperpann/errors.hpp"
#include "test_support.hpp"

using namespace hyperpann;

TEST(Dataset, BundledTreloar) {
  const Dataset d = load_dataset(support::data_path("treloar.csv"));
  EXPECT_EQ(d.name, "treloar");
  EXPECT_EQ(d.size(), 56u);
  EXPECT_EQ(d.count(DeformationMode::UX), 25u);
  EXPECT_EQ(d.count(DeformationMode::BX), 17u);
  EXPECT_EQ(d.count(DeformationMode::PS), 14u);
  for (std::size_t i = 1; i < d.size(); ++i) {
    const auto& a = d.entries[i - 1];
    const auto& b = d.entries[i];
    EXPECT_TRUE(a.mode < b.mode || (a.mode == b.mode && a.lambda <= b.lambda));
  }
}

TEST(Dataset, SortsAndSkipsComments) {
  std::istringstream in("# comment\nmode,lambda,s1\n\nPS,2.0,1.0\nUX,3.0,2.0\n# x\nUX, 1.5 ,0.5\n");
  const Dataset d = parse_dataset(in, "t");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.entries[0].mode, DeformationMode::UX);
  EXPECT_EQ(d.entries[0].lambda, 1.5);
  EXPECT_EQ(d.entries[2].mode, DeformationMode::PS);
}

namespace {
std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_dataset(in, "t");
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST(Dataset, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("mode,lambda,s1\nUX,1.5,0.3\nXX,1.2,0.1\n"), 3u);
  EXPECT_EQ(error_line("mode,lambda,s1\nUX,-1,0.3\n"), 2u);
  EXPECT_EQ(error_line("mode,lambda,s1\nUX,abc,0.3\n"), 2u);
  EXPECT_EQ(error_line("mode,lambda,s1\nUX,1.0\n"), 2u);
  EXPECT_EQ(error_line("lambda,s1\n"), 1u);
}

TEST(Dataset, UnknownModeMessage) {
  std::istringstream in("mode,lambda,s1\nXX,1.2,0.1\n");
  try {
    parse_dataset(in, "t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown mode 'XX'"), std::string::npos);
  }
}

TEST(Dataset, EmptyFileHasNoEntries) {
  std::istringstream in("");
  try {
    parse_dataset(in, "t");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "no entries");
  }
  std::istringstream header_only("mode,lambda,s1\n");
  EXPECT_THROW(parse_dataset(header_only, "t"), ParseError);
}

TEST(Dataset, MissingFileNamesPath) {
  try {
    load_dataset("/nonexistent/data.csv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/data.csv"), std::string::npos);
  }
}

TEST(Dataset, WriteRoundTripIsExact) {
  const Dataset d = load_dataset(support::data_path("treloar.csv"));
  std::stringstream buf;
  write_dataset(buf, d);
  const Dataset back = parse_dataset(buf, "treloar");
  ASSERT_EQ(back.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(back.entries[i].mode, d.entries[i].mode);
    EXPECT_EQ(back.entries[i].lambda, d.entries[i].lambda);
    EXPECT_EQ(back.entries[i].s1, d.entries[i].s1);
  }
}
