#include "planeval/blowup.hpp"

#include <algorithm>

namespace planeval {

std::string StepKey::str() const { return c ? to_string(*c) : std::string("inf"); }

namespace {

struct PrecisionExhausted {};

BranchPath simulate_with_bound(const BranchPolynomials& branch, int depth, int bound) {
  TruncatedPowerSeries u = to_series(branch.x, bound);
  TruncatedPowerSeries v = to_series(branch.y, bound);
  int du = -1;  // path index of the exceptional component {u = 0}
  int dv = -1;  // path index of the exceptional component {v = 0}
  BranchPath path;
  StepKey key;
  int satellite = -1;
  for (int k = 0; k < depth; ++k) {
    auto ou = u.order();
    auto ov = v.order();
    // chart A when ord u <= ord v
    bool chart_a;
    if (ou && ov) chart_a = *ou <= *ov;
    else if (ou) {
      if (v.bound() <= *ou) throw PrecisionExhausted{};
      chart_a = true;
    } else if (ov) {
      if (u.bound() <= *ov) throw PrecisionExhausted{};
      chart_a = false;
    } else {
      throw PrecisionExhausted{};
    }
    const int mult = chart_a ? *ou : *ov;
    path.points.push_back({key, satellite, mult});

    if (path.resolved < 0 && mult == 1) {
      int through = (du >= 0) + (dv >= 0);
      bool transversal = true;
      if (du >= 0) transversal = transversal && ou && *ou == 1;
      if (dv >= 0) transversal = transversal && ov && *ov == 1;
      if (through <= 1 && transversal) path.resolved = k;
    }
    if (k + 1 == depth) break;

    if (chart_a) {
      Rational c = 0;
      if (ov && *ov == *ou) c = v.coefficient(*ov) / u.coefficient(*ou);
      v = divide(v, u).minus_constant(c);
      satellite = (c == 0) ? dv : -1;
      if (c != 0) dv = -1;
      du = k;
      key = StepKey{c};
    } else {
      u = divide(u, v);
      satellite = du;
      dv = k;
      key = StepKey{std::nullopt};
    }
  }
  return path;
}

}  // namespace

BranchPath simulate_branch(const BranchPolynomials& branch, int depth) {
  if (depth <= 0) throw invariant_error("simulation depth must be positive");
  int bound = 32;
  for (;;) {
    try {
      return simulate_with_bound(branch, depth, bound);
    } catch (const PrecisionExhausted&) {
      if (bound > (1 << 14)) throw invariant_error("blow-up simulation ran out of precision");
      bound *= 2;
    }
  }
}

int common_prefix(const BranchPath& a, const BranchPath& b) {
  const std::size_t n = std::min(a.points.size(), b.points.size());
  std::size_t k = 0;
  if (n == 0) return 0;
  k = 1;  // roots always coincide
  while (k < n && a.points[k].key == b.points[k].key) ++k;
  return static_cast<int>(k);
}

}  // namespace planeval
