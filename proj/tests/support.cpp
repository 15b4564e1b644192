#include "support.hpp"

#include <functional>
#include <map>
#include <queue>

#include "planeval/hilbert.hpp"
#include "planeval/model_io.hpp"
#include "planeval/semigroup.hpp"
#include "planeval/series.hpp"

#ifndef PLANEVAL_DATA_DIR
#error "PLANEVAL_DATA_DIR must point at the catalog directory"
#endif

namespace planeval::testing {

CollectionModel load_catalog_model(const std::string& file) {
  const std::string path = std::string(PLANEVAL_DATA_DIR) + "/" + file + ".json";
  return model_from_json(parse_json_text(read_text_file(path), path));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const char* f : {"line", "cusp", "c25", "div23", "axes", "tang", "cusp_line", "div23_line", "triple"}) {
      auto m = load_catalog_model(f);
      const int edge = m.r() == 3 ? 8 : 12;
      out.push_back({f, std::move(m), edge});
    }
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog model " + name);
}

CollectionModel relabeled(const CollectionModel& m) {
  const auto& t = m.tree();
  std::vector<int> to_new(t.size(), -1);
  ProximityTree tree;
  to_new[0] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int old = todo.front();
    todo.pop();
    const auto& kids = t.vertex(old).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      const int sat = t.vertex(*it).satellite_of;
      to_new[*it] = tree.add_child(to_new[old], sat < 0 ? -1 : to_new[sat]);
      todo.push(*it);
    }
  }
  std::vector<ValuationData> vals(m.valuations().rbegin(), m.valuations().rend());
  for (auto& v : vals)
    for (auto& id : v.path) id = to_new[id];
  return CollectionModel(std::move(tree), std::move(vals));
}

GermPolynomial random_germ(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, max_degree);
  GermPolynomial g;
  const int d = deg(rng);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) {
      if (a + b == 0) continue;  // stay inside the maximal ideal
      const int c = coef(rng);
      if (c) g = g + GermPolynomial::monomial(c, a, b);
    }
  if (g.is_zero()) g = GermPolynomial::x();
  return g;
}

std::string check_confluence(const CollectionModel& m, int edge, int seeds) {
  const Box box = Box::cube(m.r(), edge);
  const auto full = m.with_tails_for(box.upper());
  for (std::size_t k = 0; k < box.size(); ++k) {
    const auto v = box.point(k);
    const auto seed = constraint_divisor(full, v);
    const auto ref = antinef_closure(full.tree(), seed);
    if (!is_antinef(full.tree(), ref)) return "closure of " + to_string(v) + " is not antinef";
    for (int s = 0; s < seeds; ++s) {
      std::mt19937_64 rng(1000 + s);
      if (antinef_closure(full.tree(), seed, &rng) != ref)
        return "closure of " + to_string(v) + " depends on the order (seed " + std::to_string(1000 + s) + ")";
    }
  }
  return {};
}

std::string check_additive_closure(const CollectionModel& m, int edge) {
  const Box box = Box::cube(m.r(), edge);
  const auto psg = semigroup_poincare(m, box);
  const auto from_series = semigroup_from_members(box, psg.support());
  if (auto bad = closure_violation(from_series))
    return to_string(bad->first) + " + " + to_string(bad->second) + " is missing from the support";
  const auto from_curvettes = semigroup_in_box(m, box);
  if (from_curvettes.member != from_series.member) return "series support differs from the curvette semigroup";
  return {};
}

std::string check_relabel_invariance(const CollectionModel& m, const std::vector<CollectionModel>& others) {
  const auto n = relabeled(m);
  n.check_invariants();
  if (!is_isomorphic(m, n)) return "relabeled copy not recognised as isomorphic";
  if (!is_isomorphic(n, m)) return "isomorphism test is not symmetric";
  if (n.canonical_form() != m.canonical_form()) return "canonical form changed under relabeling";
  for (std::size_t k = 0; k < others.size(); ++k)
    if (is_isomorphic(n, others[k])) return "relabeled copy matches unrelated model " + std::to_string(k);
  return {};
}

std::string check_multiplicativity(const CollectionModel& m, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < pairs; ++k) {
    const auto f = random_germ(rng, 3), g = random_germ(rng, 3);
    const auto vf = value_of(m, f), vg = value_of(m, g), vfg = value_of(m, f * g);
    for (int i = 0; i < m.r(); ++i) {
      const auto want = (vf[i] == kInfinity || vg[i] == kInfinity) ? kInfinity : vf[i] + vg[i];
      if (vfg[i] != want)
        return "pair " + std::to_string(k) + ", valuation " + std::to_string(i + 1) + ": v(fg) = " +
               std::to_string(vfg[i]) + ", v(f) + v(g) = " + std::to_string(want);
    }
  }
  return {};
}

}  // namespace planeval::testing
