#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperpann/kinematics.hpp"

namespace hyperpann {

struct DataPoint {
  DeformationMode mode = DeformationMode::UX;
  double lambda = 1.0;
  double s1 = 0.0;  // MPa
};

/// Stretch / nominal-stress tuples. Entries are grouped by mode (UX, BX, PS)
/// and sorted by stretch within each mode.
struct Dataset {
  std::string name;
  std::vector<DataPoint> entries;

  std::size_t size() const { return entries.size(); }
  std::size_t count(DeformationMode mode) const;
};

/// CSV with header `mode,lambda,s1`; `#` starts a comment line, blank lines
/// are skipped. Throws ParseError naming the offending line.
Dataset parse_dataset(std::istream& in, std::string name);
Dataset load_dataset(const std::filesystem::path& path);

void write_dataset(std::ostream& out, const Dataset& data);

}  // namespace hyperpann
