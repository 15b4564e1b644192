// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "planeval/jet_oracle.hpp"
#include "planeval/reconstruct.hpp"
#include "planeval/series.hpp"
#include "planeval/sweep.hpp"
#include "support.hpp"

using namespace planeval;
using namespace planeval::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Box box_for(const CatalogEntry& e) { return Box::cube(e.model.r(), e.edge); }

CollectionModel single_of(const CollectionModel& m, int i) { return build_model({*m.valuation(i).source}); }

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t values = 0, classes = 0;
  for (const auto& e : catalog()) {
    const Box box = box_for(e);
    const auto engine = hilbert_table(e.model, box.grown(1));
    const auto oracle = oracle_hilbert_table(e.model, box.grown(1));
    for (std::size_t k = 0; k < engine.box.size(); ++k, ++values)
      if (engine.values[k] != oracle.values[k])
        out.fail(e.name + " h" + to_string(engine.box.point(k)) + ": engine " + std::to_string(engine.values[k]) +
                 ", oracle " + std::to_string(oracle.values[k]));
    // fiber classes straight from the jet oracle, not from the shared table
    const JetOracle jets(e.model, box.upper()[0] + 1);
    const auto fibers = fiber_table(engine, box);
    for (std::size_t k = 0; k < box.size(); ++k, ++classes)
      if (!(fibers[k].p == jets.fiber_class(box.point(k))))
        out.fail(e.name + " fiber class at " + to_string(box.point(k)));
  }
  if (out.pass)
    out.detail = std::to_string(values) + " values of h and " + std::to_string(classes) + " fiber classes agree";
  return out;
}

Outcome series_identities() {
  Outcome out;
  for (const auto& e : catalog()) {
    const Box box = box_for(e);
    const auto b = compute_series(e.model, box);
    const auto hs = hilbert_series(e.model, box.grown(1));
    if (!l_identity_holds(hs, l_series(hs))) out.fail(e.name + ": t^1 L != (1 - t1...tr) H");
    if (!(poincare_from_hilbert(hs) == b.poincare)) out.fail(e.name + ": Poincare series from H differs");
    if (!(specialize(b.generalized) == b.poincare)) out.fail(e.name + ": P_g(t; 1) != P");
    if (!(specialize(b.semigroup) == b.poincare)) out.fail(e.name + ": P^_g(t; 1) != P");
  }
  if (out.pass) out.detail = "L identity, Poincare from H, both specializations on " + std::to_string(catalog().size()) + " models";
  return out;
}

Outcome hilbert_from_pg() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& e : catalog()) {
    const Box box = box_for(e);
    const auto pg = generalized_poincare(e.model, box);
    const auto hs = hilbert_series(e.model, box);
    const Box safe = hilbert_recovery_box(pg);
    if (safe.empty()) {
      out.fail(e.name + ": guaranteed box is empty");
      continue;
    }
    const auto rec = hilbert_from_generalized(pg).restricted(safe);
    for (std::size_t k = 0; k < safe.size(); ++k, ++checked) {
      const auto v = safe.point(k);
      if (rec.integer_at(v) != hs.integer_at(v))
        out.fail(e.name + " h" + to_string(v) + ": recovered " + std::to_string(rec.integer_at(v)) + ", true " +
                 std::to_string(hs.integer_at(v)));
    }
    for (const auto& [v, c] : pg.terms())
      if (c.lowest_degree() != hs.integer_at(v)) out.fail(e.name + ": lowest q-degree differs from h at " + to_string(v));
  }
  if (out.pass) out.detail = std::to_string(checked) + " values recovered on the guaranteed boxes";
  return out;
}

Outcome projection_formula() {
  Outcome out;
  constexpr int K = 6;
  for (const char* name : {"cusp_line", "div23_line", "axes"}) {
    const auto& e = catalog_entry(name);
    const auto pg = generalized_poincare(e.model, box_for(e));
    for (int i = 0; i < 2; ++i) {
      const auto proj = project(pg, {i}, K);
      const auto single = generalized_poincare(single_of(e.model, i), proj.box());
      for (std::size_t k = 0; k < proj.box().size(); ++k) {
        const auto v = proj.box().point(k);
        if (!(proj.at(v).truncated(K) == single.at(v).truncated(K)))
          out.fail(e.name + " -> " + std::to_string(i + 1) + " at " + to_string(v) + ": " + proj.at(v).str("q") +
                   " vs " + single.at(v).str("q"));
      }
    }
  }
  const auto& axes = catalog_entry("axes");
  const auto c = project(generalized_poincare(axes.model, box_for(axes)), {0}, K).at({1});
  if (!(c.truncated(4) == IntPoly::monomial(1, 1))) out.fail("AXES projection at t1 is " + c.str("q") + ", want q mod q^4");
  if (out.pass) out.detail = "K = 6 on CUSP+LINE, DIV23+LINE, AXES; AXES t1 coefficient = q mod q^4";
  return out;
}

Outcome closed_forms() {
  Outcome out;
  const auto& line = catalog_entry("line");
  const auto pl = poincare_series(line.model, box_for(line));
  for (int k = 0; k <= line.edge; ++k)
    if (pl.integer_at({k}) != 1) out.fail("LINE coefficient at t^" + std::to_string(k));
  const auto& cusp = catalog_entry("cusp");
  const auto pc = poincare_series(cusp.model, box_for(cusp));
  for (int k = 0; k <= cusp.edge; ++k) {
    const auto diff = pc.integer_at({k}) - (k ? pc.integer_at({k - 1}) : 0);
    const std::int64_t want = k == 0 || k == 2 ? 1 : k == 1 ? -1 : 0;
    if (diff != want) out.fail("CUSP: (1 - t) P has " + std::to_string(diff) + " at t^" + std::to_string(k));
  }
  const auto& axes = catalog_entry("axes");
  const auto pa = poincare_series(axes.model, box_for(axes));
  if (pa.support() != std::vector<LatticePoint>{{0, 0}} || pa.integer_at({0, 0}) != 1) out.fail("AXES: P != 1");
  const auto& div = catalog_entry("div23");
  const auto c6 = semigroup_poincare(div.model, box_for(div)).at({6});
  if (!(c6 == IntPoly({1, 1}))) out.fail("DIV23: P^_g at t^6 is " + c6.str("L"));
  if (out.pass) out.detail = "LINE, CUSP (trefoil), AXES (Hopf), DIV23 t^6 = L + 1";
  return out;
}

Outcome roundtrips() {
  Outcome out;
  int multi = 0;
  for (const auto& e : catalog()) {
    const Box box = box_for(e);
    const auto b = compute_series(e.model, box);
    if (e.model.r() > 1) {
      ++multi;
      const auto rep = reconstruct_from_generalized(b.generalized);
      if (!rep.success || !is_isomorphic(rep.model, e.model)) out.fail(e.name + ": P_g round trip");
    }
    const auto rep = reconstruct_from_semigroup_series(b.semigroup);
    if (!rep.success || !is_isomorphic(rep.model, e.model)) out.fail(e.name + ": P^_g round trip");
  }
  // ambiguity 1: same semigroup, the t^6 coefficient tells CUSP from DIV23
  const auto& cusp = catalog_entry("cusp");
  const auto& div = catalog_entry("div23");
  const auto sc = semigroup_poincare(cusp.model, box_for(cusp));
  const auto sd = semigroup_poincare(div.model, box_for(div));
  if (sc.support() != sd.support()) out.fail("case 1: CUSP and DIV23 supports differ");
  if (specialize(sc).integer_at({6}) != 1 || specialize(sd).integer_at({6}) != 2)
    out.fail("case 1: t^6 coefficients at L = 1 are not 1 and 2");
  const auto rc = reconstruct_from_semigroup_series(sc).model;
  const auto rd = reconstruct_from_semigroup_series(sd).model;
  if (is_isomorphic(rc, rd)) out.fail("case 1: CUSP and DIV23 reconstructed alike");
  // ambiguity 2: divisorial tail length next to a line
  const auto& dl = catalog_entry("div23_line");
  const auto sdl = semigroup_poincare(dl.model, box_for(dl));
  if (sdl.at({6, 2}).is_zero()) out.fail("case 2: (6,2) missing from the support");
  const auto longer = build_model({make_divisorial(2, {{3, Rational(1)}}, make_rational(4, 2)),
                                   *dl.model.valuation(1).source});
  const auto sll = semigroup_poincare(longer, box_for(dl));
  if (sll == sdl) out.fail("case 2: longer tail gives the same series");
  const auto rdl = reconstruct_from_semigroup_series(sdl).model;
  if (is_isomorphic(rdl, longer) || !is_isomorphic(rdl, dl.model)) out.fail("case 2: wrong tail length recovered");
  if (out.pass)
    out.detail = std::to_string(multi) + " P_g and " + std::to_string(catalog().size()) +
                 " P^_g round trips; both ambiguity cases separated";
  return out;
}

Outcome splitting_criterion() {
  Outcome out;
  std::ostringstream seen;
  for (auto [name, want] : {std::pair{"axes", 1}, {"tang", 2}, {"cusp_line", 1}}) {
    const auto& e = catalog_entry(name);
    const auto rep = reconstruct_from_semigroup_series(semigroup_poincare(e.model, box_for(e)));
    if (rep.pairs.empty() || !rep.pairs[0].criterion) {
      out.fail(std::string(name) + ": no splitting value reported");
      continue;
    }
    const Rational c = rep.pairs[0].criterion->c;
    seen << name << "=" << to_string(c) << " ";
    if (c != want) out.fail(std::string(name) + ": splitting value " + to_string(c));
    const int vertex = e.model.valuation(0).path[e.model.split_index(0, 1)];
    const auto cv = e.model.curvette_values(vertex);
    const auto m = e.model.normalizations();
    for (int i = 0; i < 2; ++i)
      if (make_rational(cv[i], m[i]) != c)
        out.fail(std::string(name) + ": normalized curvette value " + to_string(make_rational(cv[i], m[i])) +
                 " at the split vertex");
  }
  if (out.pass) out.detail = seen.str() + "match the split vertices";
  return out;
}

Outcome property_suites() {
  Outcome out;
  std::vector<CollectionModel> all;
  for (const auto& e : catalog()) all.push_back(e.model);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& e = catalog()[k];
    auto others = all;
    others.erase(others.begin() + k);
    for (auto s : {check_confluence(e.model, e.edge, 100), check_additive_closure(e.model, e.edge),
                   check_relabel_invariance(e.model, others), check_multiplicativity(e.model, 100, 7)})
      if (!s.empty()) out.fail(e.name + ": " + s);
  }
  if (out.pass) out.detail = "confluence (100 seeds), additive closure, relabeling, multiplicativity (100 pairs)";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},  {"series identities", series_identities},
      {"hilbert from P_g", hilbert_from_pg},          {"projection formula", projection_formula},
      {"closed forms", closed_forms},              {"round trips", roundtrips},
      {"splitting criterion", splitting_criterion}, {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << ": " << o.detail
              << " (" << static_cast<int>(secs * 10) / 10.0 << "s)" << std::endl;
  }
  return failed ? 1 : 0;
}
