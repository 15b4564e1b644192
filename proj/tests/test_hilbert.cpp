#include "doctest.h"
#include "planeval/hilbert.hpp"
#include "planeval/oracle.hpp"
#include "planeval/sweep.hpp"
#include "support.hpp"

using namespace planeval;
using namespace planeval::testing;

TEST_CASE("constraint divisors") {
  const auto div = catalog_entry("div23").model;
  const auto d = constraint_divisor(div, {6});
  const auto& p = div.valuation(0).path;
  for (int id = 0; id < div.tree().size(); ++id) CHECK(d[id] == (id == p[2] ? 6 : 0));

  const auto cusp = catalog_entry("cusp").model.with_tails_for({3});
  const auto c = constraint_divisor(cusp, {3});
  CHECK(std::count_if(c.begin(), c.end(), [](auto w) { return w != 0; }) == 1);
  CHECK(*std::max_element(c.begin(), c.end()) == 3);

  const auto dl = catalog_entry("div23_line").model.with_tails_for({6, 2});
  const auto a = constraint_divisor(dl, {6, 0});
  const auto b = constraint_divisor(dl, {0, 2});
  const auto both = constraint_divisor(dl, {6, 2});
  for (int id = 0; id < dl.tree().size(); ++id) CHECK(both[id] == std::max(a[id], b[id]));
}

TEST_CASE("antinef closure and codimension") {
  const auto cusp = catalog_entry("cusp").model;
  const auto& t = cusp.tree();
  const auto& p = cusp.valuation(0).path;
  DivisorOnTree seed(t.size(), 0);
  seed[p[2]] = 6;
  const auto closed = antinef_closure(t, seed);
  CHECK(closed[p[0]] == 2);
  CHECK(closed[p[1]] == 3);
  CHECK(closed[p[2]] == 6);
  CHECK(derived_multiplicities(t, closed)[p[0]] == 2);
  CHECK(codim(t, closed) == 5);
  CHECK(codim(t, closed) == oracle_h(catalog_entry("div23").model, {6}));
  CHECK(antinef_closure(t, closed) == closed);

  const ProximityTree lone;
  CHECK(antinef_closure(lone, {1}) == DivisorOnTree{1});
  CHECK(codim(lone, {1}) == 1);
  // on a bigger tree the seed spreads to the descendants but still cuts out the maximal ideal
  DivisorOnTree root(t.size(), 0);
  root[0] = 1;
  CHECK(codim(t, antinef_closure(t, root)) == 1);
  CHECK(codim(t, DivisorOnTree(t.size(), 0)) == 0);
  CHECK_FALSE(is_antinef(t, seed));
  CHECK(is_antinef(t, closed));
}

TEST_CASE("hilbert function") {
  CHECK(h(catalog_entry("cusp").model, {6}) == 5);
  CHECK(h(catalog_entry("axes").model, {2, 2}) == 3);
  for (const auto& e : catalog()) CHECK(h(e.model, LatticePoint(e.model.r(), 0)) == 0);
  const HilbertEngine eng(catalog_entry("tang").model, {5, 5});
  CHECK(eng.h({1, 1}) == 1);
  CHECK(eng.h({2, 2}) == oracle_h(catalog_entry("tang").model, {2, 2}));
}

TEST_CASE("fiber data") {
  const auto a = fiber_data(catalog_entry("axes").model, {1, 1});
  CHECK(a.dims == std::vector<std::int64_t>{2, 1, 1, 0});
  CHECK(a.p == IntPoly({-1, 1}));
  CHECK(a.h_plus == 3);
  const auto d = fiber_data(catalog_entry("div23").model, {6});
  CHECK(d.p == IntPoly({1, 1}));
  CHECK(d.h_plus == 7);
  const auto c = fiber_data(catalog_entry("cusp").model, {1});
  CHECK(c.dims[0] == 0);
  CHECK(c.p.is_zero());
}

TEST_CASE("parallel sweep matches the serial one") {
  for (const char* name : {"cusp_line", "triple"}) {
    const auto& e = catalog_entry(name);
    const Box box = Box::cube(e.model.r(), e.model.r() == 3 ? 5 : 9);
    CHECK(hilbert_table(e.model, box, Exec::serial).values == hilbert_table(e.model, box, Exec::parallel).values);
    CHECK(oracle_hilbert_table(e.model, box, Exec::serial).values ==
          oracle_hilbert_table(e.model, box, Exec::parallel).values);
  }
  const auto& e = catalog_entry("axes");
  CHECK_THROWS_AS(fiber_table(hilbert_table(e.model, Box::cube(2, 3)), Box::cube(2, 3)), Error);
}
