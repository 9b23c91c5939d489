#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlfc::cli {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::optional<std::string> counterexample;  // first failure, if any

  bool passed() const { return !counterexample; }
};

/// A property suite run up to rank max_n. Each suite clamps max_n to the
/// bound its sweeps are specified for.
struct Suite {
  std::string name;
  std::string summary;
  std::function<SuiteResult(int max_n)> run;
};

/// One suite per library module, in dependency order.
const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view name);

}  // namespace tlfc::cli
