#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "planeval/box.hpp"
#include "planeval/model.hpp"
#include "planeval/poly.hpp"

namespace planeval {

// Prescribed value w at each tree vertex (indexed by vertex id).
using DivisorOnTree = std::vector<std::int64_t>;

// Seed of J(v): v_i at the condition vertex of valuation i, max over valuations.
// The model must already carry the tails needed for v (see CollectionModel::with_tails_for).
DivisorOnTree constraint_divisor(const CollectionModel& model, const LatticePoint& v);

// m_s = w_s - sum of w over the vertices s is proximate to.
std::vector<std::int64_t> derived_multiplicities(const ProximityTree& tree, const DivisorOnTree& d);

// Least divisor >= d with nonnegative excesses everywhere. With `rng`, the next
// violating vertex is picked at random instead of by smallest id.
DivisorOnTree antinef_closure(const ProximityTree& tree, DivisorOnTree d, std::mt19937_64* rng = nullptr);

bool is_antinef(const ProximityTree& tree, const DivisorOnTree& d);

// sum m_s (m_s + 1) / 2; throws when d is not antinef.
std::int64_t codim(const ProximityTree& tree, const DivisorOnTree& d);

struct FiberData {
  std::vector<std::int64_t> dims;  // d_I indexed by subset bitmask
  IntPoly p;                       // p_v(𝕃)
  std::int64_t h_plus = 0;         // h(v + 1)
};

// d_I(v) = h(v+1) - h(v+e_I) read from a table covering v + 1.
FiberData fiber_data_from(const BoxTable& h, const LatticePoint& v);

// h(v) = codim of the antinef closure of the seed, on a model with tails for a fixed box.
class HilbertEngine {
 public:
  HilbertEngine(const CollectionModel& model, const LatticePoint& upper);

  const CollectionModel& model() const { return model_; }
  std::int64_t h(const LatticePoint& v) const;
  // Requires v + 1 inside the engine's box.
  FiberData fiber_data(const LatticePoint& v) const;

 private:
  CollectionModel model_;
  LatticePoint upper_;
};

std::int64_t h(const CollectionModel& model, const LatticePoint& v);
FiberData fiber_data(const CollectionModel& model, const LatticePoint& v);

}  // namespace planeval
