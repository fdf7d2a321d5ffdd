#pragma once

#include <string>
#include <vector>

namespace csdirac {

// One verification row: a named residual against its tolerance. `pass` may
// also record that an expected failure was detected, in which case `note`
// explains what the number means.
struct CheckResult {
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

using CheckList = std::vector<CheckResult>;

}  // namespace csdirac
