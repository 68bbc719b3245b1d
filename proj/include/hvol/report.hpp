#pragma once

#include <cmath>
#include <string>
#include <utility>

namespace hvol {

/// One verified inequality instance.  `holds` is tied to `margin` by
/// construction: a report holds iff margin >= -tolerance.  For "a >= b"
/// checks the margin is lhs - rhs; for equality checks it is -|lhs - rhs|;
/// for "a <= b" checks it is rhs - lhs.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool holds = false;
};

inline InequalityReport makeGeReport(std::string name, double lhs, double rhs,
                                     double tolerance) {
  const double margin = lhs - rhs;
  return {std::move(name), lhs, rhs, margin, tolerance, margin >= -tolerance};
}

inline InequalityReport makeLeReport(std::string name, double lhs, double rhs,
                                     double tolerance) {
  const double margin = rhs - lhs;
  return {std::move(name), lhs, rhs, margin, tolerance, margin >= -tolerance};
}

inline InequalityReport makeEqReport(std::string name, double lhs, double rhs,
                                     double tolerance) {
  const double margin = -std::abs(lhs - rhs);
  return {std::move(name), lhs, rhs, margin, tolerance, margin >= -tolerance};
}

}  // namespace hvol
