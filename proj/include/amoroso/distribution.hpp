#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace amoroso {

/// An interval of the extended real line. Infinite ends are always open.
struct Support {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool lower_closed = false;
  bool upper_closed = false;

  bool contains(double x) const {
    const bool above = lower_closed ? x >= lower : x > lower;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
  }

  friend bool operator==(const Support&, const Support&) = default;
};

struct SideCondition {
  std::string quantity;
  bool satisfied = false;
};

/// Closed-form summary of a distribution. Moments whose existence
/// condition fails are left empty and the failing condition is listed in
/// side_conditions.
struct DistributionSummary {
  Support support;
  double mode = 0.0;
  std::optional<double> mean;
  std::optional<double> variance;
  std::optional<double> skew;
  std::optional<double> kurtosis;  // excess kurtosis
  double entropy = 0.0;
  std::vector<SideCondition> side_conditions;
};

}  // namespace amoroso
