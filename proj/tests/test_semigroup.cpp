#include "doctest.h"
#include "planeval/semigroup.hpp"
#include "support.hpp"

using namespace planeval;
using namespace planeval::testing;

namespace {
std::vector<int> members_r1(const SemigroupBox& s) {
  std::vector<int> out;
  for (const auto& v : s.members()) out.push_back(v[0]);
  return out;
}
}  // namespace

TEST_CASE("semigroups in a box") {
  const std::vector<int> want{0, 2, 3, 4, 5, 6, 7};
  CHECK(members_r1(semigroup_in_box(catalog_entry("cusp").model, Box({7}))) == want);
  CHECK(members_r1(semigroup_in_box(catalog_entry("div23").model, Box({7}))) == want);
  const auto axes = semigroup_in_box(catalog_entry("axes").model, Box({3, 3}));
  const Box b({3, 3});
  for (std::size_t k = 0; k < b.size(); ++k) {
    const auto v = b.point(k);
    CHECK(axes.contains(v) == ((v[0] == 0 && v[1] == 0) || (v[0] >= 1 && v[1] >= 1)));
  }
}

TEST_CASE("minimal generators") {
  CHECK(minimal_generators_r1(semigroup_in_box(catalog_entry("cusp").model, Box({14}))) == std::vector<int>{2, 3});
  CHECK(minimal_generators_r1(semigroup_in_box(catalog_entry("line").model, Box({6}))) == std::vector<int>{1});
  CHECK(minimal_generators_r1(semigroup_in_box(catalog_entry("c25").model, Box({14}))) == std::vector<int>{2, 5});
  CHECK_THROWS_AS(minimal_generators_r1(semigroup_in_box(catalog_entry("c25").model, Box({3}))), Error);
}

TEST_CASE("closure violations") {
  const Box b({6});
  CHECK_FALSE(closure_violation(semigroup_from_members(b, {{0}, {2}, {3}, {4}, {5}, {6}})));
  const auto bad = closure_violation(semigroup_from_members(b, {{0}, {2}, {3}, {5}, {6}}));
  REQUIRE(bad);
  CHECK(bad->first[0] + bad->second[0] == 4);
}

TEST_CASE("splitting values") {
  const Box b({8, 8});
  const auto axes = splitting_value(semigroup_in_box(catalog_entry("axes").model, b), 1, 1);
  CHECK(axes.c == 1);
  CHECK(axes.point == LatticePoint{1, 1});
  const auto tang = splitting_value(semigroup_in_box(catalog_entry("tang").model, b), 1, 1);
  CHECK(tang.c == 2);
  CHECK(tang.point == LatticePoint{2, 2});
  const auto cl = splitting_value(semigroup_in_box(catalog_entry("cusp_line").model, b), 2, 1);
  CHECK(cl.c == 1);
  CHECK(cl.point == LatticePoint{2, 1});
  // witnesses share a coordinate with the diagonal point
  for (const auto& sv : {axes, tang, cl}) {
    REQUIRE(sv.witness.size() == 2);
    CHECK((sv.witness[0] == sv.point[0] || sv.witness[1] == sv.point[1]));
    CHECK(sv.witness != sv.point);
  }
}
