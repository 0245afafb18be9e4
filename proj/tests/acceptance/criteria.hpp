#pragma once

#include <functional>
#include <string>
#include <vector>

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 20) failures.push_back(what);
    }
  }
};

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
};

/// Criteria 1..9 in order. Criterion 9 reads the source tree under
/// `source_dir` and the non-integrality count left by criteria 5 and 8.
std::vector<Criterion> criteria(const std::string& source_dir);

}  // namespace acceptance
