#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planeval/box.hpp"
#include "planeval/model.hpp"

namespace planeval {

// Members of a semigroup of values inside a box.
struct SemigroupBox {
  Box box;
  std::vector<char> member;           // indexed by box index
  std::vector<ValueVector> generators;  // generator set used for the closure (may be empty)

  bool contains(const LatticePoint& v) const { return box.contains(v) && member[box.index(v)]; }
  // Members in lexicographic order.
  std::vector<LatticePoint> members() const;
};

// Additive closure in the box of the curvette values of every tree vertex.
SemigroupBox semigroup_in_box(const CollectionModel& model, const Box& box);

// Wraps an explicit member list (e.g. the support of a series).
SemigroupBox semigroup_from_members(const Box& box, const std::vector<LatticePoint>& members);

// First pair u, w of members whose sum lies in the box but is not a member.
std::optional<std::pair<LatticePoint, LatticePoint>> closure_violation(const SemigroupBox& s);

// Minimal generators of a numerical semigroup seen in a box. The box certifies the
// list once it shows g0 consecutive members, g0 the smallest positive member.
std::vector<int> minimal_generators_r1(const SemigroupBox& s);

struct SplittingValue {
  Rational c;               // normalized diagonal value
  LatticePoint point;       // (c m_1, c m_2)
  LatticePoint witness;     // lexicographically smallest member sharing a coordinate
  int witnesses_first = 0;  // members in the box sharing the first coordinate
  int witnesses_second = 0; // members in the box sharing the second coordinate
  // Witnesses exist along both coordinates; the reported one is a choice.
  bool tie() const { return witnesses_first > 0 && witnesses_second > 0; }
};

SplittingValue splitting_value(const SemigroupBox& s, std::int64_t m1, std::int64_t m2);

}  // namespace planeval
