#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pyrito {

// A named exact identity. `run` returns an empty string on success
// and a description of the first mismatches otherwise.
struct Check {
  std::string name;
  int criterion;  // acceptance criterion 1..10
  std::function<std::string()> run;
};

struct CheckResult {
  std::string name;
  int criterion;
  bool pass;
  std::string detail;
};

const std::vector<Check>& check_registry();

// Runs the named checks, or all of them when `only` is empty. Exceptions
// thrown by a check count as failures.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only = {});

}  // namespace pyrito
