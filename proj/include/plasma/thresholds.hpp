#pragma once

#include <string_view>
#include <vector>

namespace plasma {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kThresholdsVersion = "1";

struct Threshold {
  const char* key;
  double value;
  const char* meaning;
};

// Single table of pass/fail limits used by `verify` and the acceptance run.
const std::vector<Threshold>& thresholds();

// Throws std::out_of_range for an unknown key.
double threshold(std::string_view key);

}  // namespace plasma
