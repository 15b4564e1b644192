#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeval/puiseux.hpp"

namespace planeval {

// Position of an infinitely near point on the exceptional divisor of its parent:
// the affine coordinate c of the chart v/u, or infinity for the other chart.
struct StepKey {
  std::optional<Rational> c;  // nullopt = infinity
  bool operator==(const StepKey&) const = default;
  std::string str() const;
};

struct BranchPoint {
  StepKey key;             // meaningless for the root
  int satellite_of = -1;   // path index of the second proximate point, -1 if free
  std::int64_t multiplicity = 0;
};

// The sequence of infinitely near points of a branch, obtained by blowing up.
struct BranchPath {
  std::vector<BranchPoint> points;
  // First index at which the strict transform is smooth and transversal to the single
  // exceptional component through the point (all later points are free, multiplicity 1);
  // -1 when not reached within the simulated depth.
  int resolved = -1;
};

// Follows the branch (x(t), y(t)) through `depth` successive blow-ups.
BranchPath simulate_branch(const BranchPolynomials& branch, int depth);

// Length of the common prefix of two point sequences.
int common_prefix(const BranchPath& a, const BranchPath& b);

}  // namespace planeval
