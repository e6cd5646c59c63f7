#pragma once

#include <vector>

#include "monoclosure/rational.hpp"

namespace monoclosure::lp {

/// maximize c·x subject to A x = b, x >= 0, over exact rationals.
struct LinearProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase dense tableau simplex with Bland's rule (smallest-index entering
/// and leaving variables), so it terminates on degenerate problems.
Solution maximize(const LinearProgram& lp);

}  // namespace monoclosure::lp
