#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace monoclosure {

struct SelftestReport {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool budget_exhausted = false;
};

/// Runs the randomized property suite (pipeline agreement, closure axioms,
/// sandwich, localization, primary equality, oracle consistency, glued-ring
/// seminormality) on seeded instances until `budget` elapses or
/// `max_instances` have been checked.
SelftestReport run_selftest(std::uint64_t seed, std::chrono::milliseconds budget,
                            std::size_t max_instances = 1000);

}  // namespace monoclosure
