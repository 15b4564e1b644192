#include "doctest.h"
#include "planeval/model_io.hpp"
#include "planeval/series.hpp"
#include "support.hpp"

using namespace planeval;
using namespace planeval::testing;

namespace {
std::vector<std::int64_t> coefficients_r1(const SparseSeries& s) {
  std::vector<std::int64_t> out;
  for (int k = 0; k <= s.box().upper()[0]; ++k) out.push_back(s.integer_at({k}));
  return out;
}
}  // namespace

TEST_CASE("hilbert series") {
  CHECK(coefficients_r1(hilbert_series(catalog_entry("line").model, Box({4}))) ==
        std::vector<std::int64_t>{0, 1, 2, 3, 4});
  CHECK(coefficients_r1(hilbert_series(catalog_entry("cusp").model, Box({4}))) ==
        std::vector<std::int64_t>{0, 1, 1, 2, 3});
}

TEST_CASE("poincare series") {
  CHECK(coefficients_r1(poincare_series(catalog_entry("cusp").model, Box({7}))) ==
        std::vector<std::int64_t>{1, 0, 1, 1, 1, 1, 1, 1});
  CHECK(coefficients_r1(poincare_series(catalog_entry("div23").model, Box({7}))) ==
        std::vector<std::int64_t>{1, 0, 1, 1, 1, 1, 2, 1});
  const auto axes = poincare_series(catalog_entry("axes").model, Box({2, 2}));
  CHECK(axes.support() == std::vector<LatticePoint>{{0, 0}});
  CHECK(axes.integer_at({0, 0}) == 1);
  const auto line = poincare_from_hilbert(hilbert_series(catalog_entry("line").model, Box({6})));
  CHECK(coefficients_r1(line) == std::vector<std::int64_t>(6, 1));
}

TEST_CASE("generalized and semigroup series") {
  const auto div = catalog_entry("div23").model;
  CHECK(generalized_poincare(div, Box({7})).at({6}) == IntPoly({0, 0, 0, 0, 0, 1, 1}));
  CHECK(semigroup_poincare(div, Box({7})).at({6}) == IntPoly({1, 1}));
  const auto cusp = semigroup_poincare(catalog_entry("cusp").model, Box({7}));
  for (const auto& [v, c] : cusp.terms()) CHECK(c == IntPoly::constant(1));
  CHECK(cusp.support().size() == 7);
  CHECK(semigroup_poincare(catalog_entry("axes").model, Box({2, 2})).at({1, 1}) == IntPoly({-1, 1}));
  CHECK(generalized_poincare(catalog_entry("axes").model, Box({2, 2})).at({1, 1}) == IntPoly({0, 1, -1}));
  const auto pc = generalized_poincare(catalog_entry("cusp").model, Box({7}));
  CHECK(specialize(pc) == poincare_series(catalog_entry("cusp").model, Box({7})));
  CHECK(coefficients_r1(specialize(semigroup_poincare(div, Box({7}))))[6] == 2);
}

TEST_CASE("one sweep gives all four series") {
  const auto& e = catalog_entry("tang");
  const Box box({6, 6});
  const auto b = compute_series(e.model, box, Exec::serial);
  CHECK(b.hilbert == hilbert_series(e.model, box));
  CHECK(b.poincare == poincare_series(e.model, box));
  CHECK(b.generalized == generalized_poincare(e.model, box));
  CHECK(b.semigroup == semigroup_poincare(e.model, box));
  CHECK(compute_series(e.model, box, Exec::parallel).generalized == b.generalized);
}

TEST_CASE("series identities") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const Box box = Box::cube(e.model.r(), e.model.r() == 3 ? 4 : 7);
    const auto hs = hilbert_series(e.model, box.grown(1));
    CHECK(l_identity_holds(hs, l_series(hs)));
    CHECK(poincare_from_hilbert(hs) == poincare_series(e.model, box));
  }
  // a wrong L must be rejected
  const auto hs = hilbert_series(catalog_entry("cusp").model, Box({6}));
  auto l = l_series(hs);
  l.set({2}, IntPoly::constant(l.integer_at({2}) + 1));
  CHECK_FALSE(l_identity_holds(hs, l));
}

TEST_CASE("projection") {
  const auto& e = catalog_entry("axes");
  const auto pg = generalized_poincare(e.model, Box({6, 6}));
  CHECK(max_projection_precision(pg, {0}) == 7);
  const auto p = project(pg, {0}, 7);
  CHECK(p.box() == Box({6}));
  CHECK(p.at({1}).truncated(4) == IntPoly::monomial(1, 1));
  const auto single = generalized_poincare(build_model({*e.model.valuation(0).source}), Box({6}));
  for (int k = 0; k <= 6; ++k) CHECK(p.at({k}).truncated(7) == single.at({k}).truncated(7));
  CHECK_THROWS_AS(project(pg, {0}, 8), Error);
  CHECK_THROWS_AS(project(pg, {2}, 3), Error);
  CHECK_THROWS_AS(project(specialize(pg), {0}, 3), Error);
}

TEST_CASE("series json") {
  const auto s = semigroup_poincare(catalog_entry("div23_line").model, Box({5, 3}));
  const auto text = dump_json(series_to_json(s));
  const auto back = series_from_json(parse_json_text(text, "series"));
  CHECK(back == s);
  CHECK(dump_json(series_to_json(back)) == text);
  try {
    series_from_json(parse_json_text("{\"vars\":1,\"box\":[3],\"ring\":\"x\",\"terms\":[]}", "series"));
    FAIL("accepted an unknown ring");
  } catch (const Error& err) {
    CHECK(err.kind() == Error::Kind::parse);
    CHECK(std::string(err.what()).find("ring") != std::string::npos);
  }
}
