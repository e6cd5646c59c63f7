#pragma once

#include <string>
#include <vector>

#include "monoclosure/json_io.hpp"

namespace monoclosure {

struct ReproduceReport {
  std::string name;
  Json actual;
  Json expected;
  bool matches = false;
  /// JSON patch turning `expected` into `actual`; empty when they match.
  std::string delta;
};

/// counterexample, fiber-criterion, high-degree, primary-equality.
const std::vector<std::string>& reproduce_names();

/// Runs a canned computation and compares it with the stored expectation.
/// InputError for an unknown name.
ReproduceReport reproduce(const std::string& name);

}  // namespace monoclosure
