#include "hyperpann/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "hyperpann/errors.hpp"

namespace hyperpann {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(std::string("cannot parse ") + what + " '" + std::string(field) + "'", line);
  }
  return value;
}

int mode_rank(DeformationMode m) { return static_cast<int>(m); }

}  // namespace

std::size_t Dataset::count(DeformationMode mode) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const DataPoint& p) { return p.mode == mode; }));
}

Dataset parse_dataset(std::istream& in, std::string name) {
  Dataset data;
  data.name = std::move(name);
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "mode" || fields[1] != "lambda" || fields[2] != "s1") {
        throw ParseError("expected header 'mode,lambda,s1'", line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, found " + std::to_string(fields.size()), line_no);
    }
    const auto mode = parse_mode(fields[0]);
    if (!mode) throw ParseError("unknown mode '" + std::string(fields[0]) + "'", line_no);
    const double lambda = parse_number(fields[1], line_no, "lambda");
    if (!(lambda > 0.0)) throw ParseError("lambda must be positive", line_no);
    const double s1 = parse_number(fields[2], line_no, "s1");
    data.entries.push_back({*mode, lambda, s1});
  }
  if (data.entries.empty()) throw ParseError("no entries");
  std::stable_sort(data.entries.begin(), data.entries.end(), [](const DataPoint& a, const DataPoint& b) {
    if (a.mode != b.mode) return mode_rank(a.mode) < mode_rank(b.mode);
    return a.lambda < b.lambda;
  });
  return data;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset " + path.string());
  try {
    return parse_dataset(in, path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_dataset(std::ostream& out, const Dataset& data) {
  out << "mode,lambda,s1\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& p : data.entries) out << to_string(p.mode) << ',' << p.lambda << ',' << p.s1 << '\n';
}

}  // namespace hyperpann
