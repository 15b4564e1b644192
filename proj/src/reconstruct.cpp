#include "planeval/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace planeval {

// ---------------------------------------------------------------------------
// Hilbert function <-> generalized series

SparseSeries hilbert_from_generalized(const SparseSeries& pg) {
  if (pg.ring() != Ring::q) throw invariant_error("hilbert_from_generalized: expected a q-coefficient series");
  const Box& box = pg.box();
  constexpr std::int64_t kNone = -1;
  std::vector<std::int64_t> best(box.size(), kNone);
  // reverse lexicographic order visits v + e_i before v
  for (std::size_t k = box.size(); k-- > 0;) {
    const auto v = box.point(k);
    std::int64_t b = kNone;
    auto c = pg.at(v);
    if (!c.is_zero()) b = c.lowest_degree();
    for (int i = 0; i < box.r(); ++i) {
      if (v[i] == box.upper()[i]) continue;
      auto w = v;
      ++w[i];
      auto bw = best[box.index(w)];
      if (bw != kNone && (b == kNone || bw < b)) b = bw;
    }
    best[k] = b;
  }
  SparseSeries out(box, Ring::integer);
  for (std::size_t k = 0; k < box.size(); ++k)
    if (best[k] != kNone) out.set(box.point(k), IntPoly::constant(best[k]));
  return out;
}

Box hilbert_recovery_box(const SparseSeries& pg) {
  std::int64_t m = 1;
  for (int i = 0; i < pg.r(); ++i) {
    int low = 0;
    for (const auto& [v, c] : pg.terms())
      if (v[i] > 0 && (low == 0 || v[i] < low)) low = v[i];
    m = std::max<std::int64_t>(m, low);
  }
  return pg.box().shrunk(static_cast<int>(2 * m));
}

SparseSeries generalized_from_hilbert(const SparseSeries& hs) {
  if (hs.ring() != Ring::integer) throw invariant_error("generalized_from_hilbert: expected an integer series");
  BoxTable t{hs.box(), std::vector<std::int64_t>(hs.box().size())};
  for (std::size_t k = 0; k < t.box.size(); ++k) t.values[k] = hs.integer_at(t.box.point(k));
  const Box small = hs.box().shrunk(1);
  if (small.empty()) throw invariant_error("generalized_from_hilbert: box too small");
  return series_from_table(t, small).generalized;
}

SemigroupBox support_semigroup(const SparseSeries& s) {
  auto sg = semigroup_from_members(s.box(), s.support());
  if (!s.box().empty() && !sg.contains(LatticePoint(s.r(), 0)))
    throw verification_error("support does not contain 0");
  if (auto bad = closure_violation(sg))
    throw verification_error("support is not additively closed: " + to_string(bad->first) + " + " +
                             to_string(bad->second));
  return sg;
}

CollectionModel assemble_dual_graph(const std::vector<ValuationShape>& shapes,
                                   const std::vector<std::vector<int>>& split) {
  return glue_shapes(shapes, split);
}

// ---------------------------------------------------------------------------
// Single valuations

namespace {

struct Characteristic {
  int n = 1;
  std::vector<int> beta;  // beta_1, ..., beta_g
};

std::optional<Characteristic> characteristic_from_generators(const std::vector<int>& gens) {
  if (gens.empty()) return std::nullopt;
  Characteristic ch;
  ch.n = gens[0];
  std::vector<int> es{gens[0]};  // e_i = gcd(gbar_0, ..., gbar_i)
  for (std::size_t i = 1; i < gens.size(); ++i) {
    es.push_back(std::gcd(es.back(), gens[i]));
    if (es[i] >= es[i - 1]) return std::nullopt;
  }
  if (es.back() != 1) return std::nullopt;
  // beta_1 = gbar_1, beta_{i+1} = gbar_{i+1} - n_i gbar_i + beta_i with n_i = e_{i-1}/e_i
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (i == 1) {
      ch.beta.push_back(gens[1]);
      continue;
    }
    const int n_prev = es[i - 2] / es[i - 1];
    if (gens[i] <= n_prev * gens[i - 1]) return std::nullopt;
    ch.beta.push_back(gens[i] - n_prev * gens[i - 1] + ch.beta.back());
  }
  return ch;
}

std::vector<PuiseuxTerm> unit_terms(const std::vector<int>& exps) {
  std::vector<PuiseuxTerm> t;
  for (int k : exps) t.push_back({k, Rational(1)});
  return t;
}

struct Candidate {
  PuiseuxDatum datum;
  CollectionModel model;
};

std::string describe(const PuiseuxDatum& d) {
  std::ostringstream s;
  s << to_string(d.kind) << " n=" << d.n << " terms=[";
  for (std::size_t i = 0; i < d.terms.size(); ++i) s << (i ? "," : "") << d.terms[i].exponent;
  s << "]";
  if (d.truncation) s << " trunc=" << to_string(*d.truncation);
  return s.str();
}

// Curve and divisorial models with the given characteristic exponents whose divisor
// (if any) has self curvette value at most `bound`.
std::vector<Candidate> single_candidates(const Characteristic& ch, int bound) {
  std::vector<Candidate> out;
  auto terms = unit_terms(ch.beta);
  auto curve = make_curve(ch.n, terms);
  out.push_back({curve, build_model({curve})});
  if (!ch.beta.empty()) {
    std::vector<int> head(ch.beta.begin(), ch.beta.end() - 1);
    auto d = make_divisorial(ch.n, unit_terms(head), make_rational(ch.beta.back(), ch.n));
    auto m = build_model({d});
    if (m.curvette_values(m.valuation(0).last())[0] <= bound) out.push_back({d, m});
  }
  for (int k = ch.beta.empty() ? 1 : ch.beta.back() + 1;; ++k) {
    auto d = make_divisorial(ch.n, terms, make_rational(k, ch.n));
    auto m = build_model({d});
    if (m.curvette_values(m.valuation(0).last())[0] > bound) break;
    out.push_back({d, m});
  }
  return out;
}

std::vector<int> generators_of(const SemigroupBox& s) {
  try {
    return minimal_generators_r1(s);
  } catch (const Error& e) {
    throw inconclusive_error(std::string(e.what()) + "; enlarge the box edge to at least " +
                             std::to_string(2 * s.box.upper()[0]));
  }
}

std::vector<Candidate> candidates_for(const std::vector<int>& gens, int bound) {
  auto ch = characteristic_from_generators(gens);
  if (!ch) throw verification_error("generators do not form the semigroup of a plane branch");
  return single_candidates(*ch, bound);
}

}  // namespace

CollectionModel single_valuation_topology(const SparseSeries& p) {
  if (p.r() != 1 || p.ring() != Ring::integer)
    throw invariant_error("single_valuation_topology: expected a one-variable integer series");
  const int V = p.box().upper()[0];
  auto gens = generators_of(support_semigroup(p));
  std::vector<const Candidate*> matches;
  auto cands = candidates_for(gens, V);
  for (const auto& c : cands)
    if (compute_series(c.model, p.box()).poincare == p) matches.push_back(&c);
  if (matches.empty()) throw verification_error("single_valuation_topology: no candidate reproduces the series");
  if (matches.size() > 1) {
    std::string what = "single_valuation_topology: box too small to separate";
    for (auto* m : matches) what += " [" + describe(m->datum) + "]";
    throw inconclusive_error(what);
  }
  return matches[0]->model;
}

// ---------------------------------------------------------------------------
// Multi-valuation pipelines

namespace {

Json rational_json(const Rational& q) {
  return Json::array({to_int64(q.get_num()), to_int64(q.get_den())});
}

std::vector<std::vector<int>> split_table(int r) { return std::vector<std::vector<int>>(r, std::vector<int>(r, 0)); }

std::optional<CollectionModel> try_glue(const std::vector<ValuationShape>& shapes,
                                        const std::vector<std::vector<int>>& split) {
  try {
    return glue_shapes(shapes, split);
  } catch (const Error&) {
    return std::nullopt;
  }
}

int split_bound(const ValuationShape& a, const ValuationShape& b, const Box& box) {
  int bound = 0;
  for (int u : box.upper()) bound = std::max(bound, u);
  if (a.kind == ValuationKind::divisorial) bound = std::min(bound, static_cast<int>(a.weights.size()) - 1);
  if (b.kind == ValuationKind::divisorial) bound = std::min(bound, static_cast<int>(b.weights.size()) - 1);
  return bound;
}

// Points v whose coefficient modulo q^K is exact and nonzero iff v is in S.
SemigroupBox trusted_support(const SparseSeries& s, int K) {
  std::vector<LatticePoint> low;
  for (const auto& [v, c] : s.terms())
    if (c.lowest_degree() < K) low.push_back(v);
  SemigroupBox sg = semigroup_from_members(s.box(), {});
  for (std::size_t k = 0; k < s.box().size(); ++k) {
    const auto v = s.box().point(k);
    bool trusted = std::any_of(low.begin(), low.end(), [&](const LatticePoint& w) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (w[i] < v[i]) return false;
      return true;
    });
    if (trusted && !s.at(v).is_zero()) sg.member[k] = 1;
  }
  return sg;
}

bool equal_mod(const SparseSeries& a, const SparseSeries& b, int K) {
  if (!(a.box() == b.box())) return false;
  for (std::size_t k = 0; k < a.box().size(); ++k) {
    const auto v = a.box().point(k);
    if (!(a.at(v).truncated(K) == b.at(v).truncated(K))) return false;
  }
  return true;
}

std::size_t residual(const SparseSeries& a, const SparseSeries& b) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < a.box().size(); ++k) {
    const auto v = a.box().point(k);
    if (!(a.at(v) == b.at(v))) ++n;
  }
  return n;
}

SparseSeries recompute(const CollectionModel& m, const SparseSeries& like) {
  auto b = compute_series(m, like.box());
  switch (like.ring()) {
    case Ring::q: return b.generalized;
    case Ring::L: return b.semigroup;
    case Ring::integer: return b.hilbert;
  }
  return {};
}

// Glues every combination of per-valuation candidates and per-pair split candidates and
// keeps the ones whose recomputed series equals `target`.
void choose_by_forward_verification(ReconstructionReport& rep,
                                    const std::vector<std::vector<ValuationShape>>& singles,
                                    const SparseSeries& target) {
  const int r = static_cast<int>(singles.size());
  std::vector<std::pair<CollectionModel, std::vector<int>>> matches;  // model, choice of pair splits
  std::vector<std::size_t> pick(r, 0);
  std::vector<std::size_t> pair_pick(rep.pairs.size(), 0);
  std::function<void(int)> over_singles;
  std::function<void(std::size_t)> over_pairs;
  over_pairs = [&](std::size_t p) {
    if (p == rep.pairs.size()) {
      std::vector<ValuationShape> shapes;
      for (int i = 0; i < r; ++i) shapes.push_back(singles[i][pick[i]]);
      auto split = split_table(r);
      std::vector<int> chosen;
      for (std::size_t q = 0; q < rep.pairs.size(); ++q) {
        const auto& pr = rep.pairs[q];
        split[pr.i][pr.j] = split[pr.j][pr.i] = pr.candidates[pair_pick[q]];
        chosen.push_back(pr.candidates[pair_pick[q]]);
      }
      auto m = try_glue(shapes, split);
      if (m && recompute(*m, target) == target) matches.emplace_back(*m, chosen);
      return;
    }
    for (pair_pick[p] = 0; pair_pick[p] < rep.pairs[p].candidates.size(); ++pair_pick[p]) over_pairs(p + 1);
  };
  over_singles = [&](int i) {
    if (i == r) {
      over_pairs(0);
      return;
    }
    for (pick[i] = 0; pick[i] < singles[i].size(); ++pick[i]) over_singles(i + 1);
  };
  over_singles(0);
  if (matches.empty()) {
    std::string what = "no glued candidate reproduces the input series (split candidates:";
    for (const auto& pr : rep.pairs) {
      what += " " + std::to_string(pr.i + 1) + "," + std::to_string(pr.j + 1) + "->{";
      for (std::size_t q = 0; q < pr.candidates.size(); ++q) what += (q ? "," : "") + std::to_string(pr.candidates[q]);
      what += "}";
    }
    for (const auto& e : rep.evidence) what += "; " + e;
    throw verification_error(what + ")");
  }
  for (std::size_t a = 1; a < matches.size(); ++a)
    if (!is_isomorphic(matches[a].first, matches[0].first))
      throw inconclusive_error(std::to_string(matches.size()) +
                               " non-isomorphic candidates reproduce the series on this box; enlarge every bound to at least " +
                               std::to_string(2 * *std::max_element(target.box().upper().begin(), target.box().upper().end())));
  rep.model = matches[0].first;
  for (std::size_t q = 0; q < rep.pairs.size(); ++q) rep.pairs[q].split = matches[0].second[q];
  rep.residual = 0;
  rep.success = true;
}

std::vector<int> all_splits(const ValuationShape& a, const ValuationShape& b, const Box& box) {
  std::vector<int> out;
  const int bound = split_bound(a, b, box);
  for (int k = 0; k <= bound; ++k) {
    auto split = split_table(2);
    split[0][1] = split[1][0] = k;
    if (try_glue({a, b}, split)) out.push_back(k);
  }
  return out;
}

}  // namespace

ReconstructionReport reconstruct_from_generalized(const SparseSeries& pg, int qprec) {
  if (pg.ring() != Ring::q) throw invariant_error("reconstruct_from_generalized: expected a q-coefficient series");
  ReconstructionReport rep;
  rep.entry = "generalized";
  const int r = pg.r();
  if (r == 1) {
    auto p = specialize(pg);
    rep.model = single_valuation_topology(p);
    rep.generators.push_back(generators_of(support_semigroup(p)));
  } else {
    std::vector<std::vector<ValuationShape>> singles(r);
    for (int i = 0; i < r; ++i) {
      const int K = qprec > 0 ? qprec : max_projection_precision(pg, {i});
      auto proj = project(pg, {i}, K);
      int top = -1;  // largest support point whose lowest q-degree survives the truncation
      for (const auto& [v, c] : proj.terms())
        if (c.lowest_degree() < K) top = std::max(top, v[0]);
      if (top < 1) throw inconclusive_error("projection to valuation " + std::to_string(i + 1) +
                                            " keeps no trusted terms; enlarge every bound to at least " +
                                            std::to_string(2 * pg.box().upper()[i]));
      auto p = specialize(proj.restricted(Box({top - 1})));
      auto single = single_valuation_topology(p);
      rep.generators.push_back(generators_of(support_semigroup(p)));
      rep.evidence.push_back("valuation " + std::to_string(i + 1) + ": projection mod q^" + std::to_string(K) +
                             ", trusted up to " + std::to_string(top - 1) + ", recovered " +
                             describe(*single.valuation(0).source));
      singles[i].push_back(shape_of(single, 0));
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        ReconstructionReport::Pair pr{i, j, std::nullopt, {}, -1};
        SparseSeries pair = pg;
        int K = std::numeric_limits<int>::max();
        if (r > 2) {
          K = qprec > 0 ? qprec : max_projection_precision(pg, {i, j});
          pair = project(pg, {i, j}, K);
        }
        const auto& si = singles[i][0];
        const auto& sj = singles[j][0];
        try {
          pr.criterion = splitting_value(r > 2 ? trusted_support(pair, K) : support_semigroup(pair),
                                         si.weights[0], sj.weights[0]);
        } catch (const Error& e) {
          rep.evidence.push_back("pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ": diagonal criterion not found in box (" + e.what() + ")");
        }
        for (int k : all_splits(si, sj, pg.box())) {
          auto split = split_table(2);
          split[0][1] = split[1][0] = k;
          auto m = glue_shapes({si, sj}, split);
          auto mine = compute_series(m, pair.box()).generalized;
          if (r == 2 ? mine == pair : equal_mod(mine, pair, K)) pr.candidates.push_back(k);
        }
        if (pr.candidates.empty())
          throw verification_error("pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ": no splitting point reproduces the projected series");
        rep.pairs.push_back(pr);
      }
    choose_by_forward_verification(rep, singles, pg);
  }
  for (const auto& v : rep.model.valuations()) {
    rep.kinds.push_back(to_string(v.kind));
    rep.normalizations.push_back(v.normalization());
  }
  rep.residual = residual(recompute(rep.model, pg), pg);
  rep.success = rep.residual == 0;
  return rep;
}

namespace {

enum class TailVerdict { curve, growing, inconclusive };

// Curve valuations admit members with fixed complementary values and arbitrarily
// large own value; divisorial ones are confined to a half-space.
TailVerdict tail_verdict(const SemigroupBox& s, int i, std::string& note) {
  const int V = s.box.upper()[i];
  std::vector<std::optional<LatticePoint>> prof(V + 1);
  for (const auto& v : s.members()) {
    auto& p = prof[v[i]];
    LatticePoint rest;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (static_cast<int>(j) != i) rest.push_back(v[j]);
    if (!p) p = rest;
    else
      for (std::size_t j = 0; j < rest.size(); ++j) (*p)[j] = std::min((*p)[j], rest[j]);
  }
  const int half = (V + 1) / 2;
  bool defined = true, varies = false;
  std::optional<LatticePoint> first;
  for (int a = std::max(half, 1); a <= V; ++a) {
    if (!prof[a]) {
      defined = false;
      continue;
    }
    if (!first) first = prof[a];
    else if (*prof[a] != *first) varies = true;
  }
  note = "valuation " + std::to_string(i + 1) + ": complementary profile on [" + std::to_string(half) + "," +
         std::to_string(V) + "] " + (varies ? "grows" : defined ? "is constant " + to_string(*first) : "has gaps");
  if (varies) return TailVerdict::growing;
  if (defined && first) return TailVerdict::curve;
  return TailVerdict::inconclusive;
}

// Members on the boundary ray {v_j / v_i minimal for every j}, by increasing v_i.
std::vector<LatticePoint> ray_points(const SemigroupBox& s, int i) {
  const auto mem = s.members();
  const int r = s.box.r();
  std::vector<std::optional<Rational>> slope(r);
  for (const auto& v : mem) {
    if (v[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      Rational q = make_rational(v[j], v[i]);
      if (!slope[j] || q < *slope[j]) slope[j] = q;
    }
  }
  std::vector<LatticePoint> out;
  for (const auto& v : mem) {
    if (v[i] == 0) continue;
    bool on = true;
    for (int j = 0; j < r && on; ++j)
      if (j != i) on = slope[j] && make_rational(v[j], v[i]) == *slope[j];
    if (on) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [i](const LatticePoint& a, const LatticePoint& b) { return a[i] < b[i]; });
  return out;
}

}  // namespace

ReconstructionReport reconstruct_from_semigroup_series(const SparseSeries& psg) {
  if (psg.ring() != Ring::L)
    throw invariant_error("reconstruct_from_semigroup_series: expected an 𝕃-coefficient series");
  ReconstructionReport rep;
  rep.entry = "semigroup";
  const int r = psg.r();
  const auto S = support_semigroup(psg);
  if (r == 1) {
    auto p = specialize(psg);
    rep.model = single_valuation_topology(p);
    rep.generators.push_back(generators_of(S));
  } else {
    std::vector<std::vector<ValuationShape>> singles(r);
    for (int i = 0; i < r; ++i) {
      const int V = psg.box().upper()[i];
      std::vector<LatticePoint> proj;
      for (const auto& v : S.members()) proj.push_back({v[i]});
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      auto gens = generators_of(semigroup_from_members(Box({V}), proj));
      rep.generators.push_back(gens);
      std::string note;
      auto verdict = tail_verdict(S, i, note);
      rep.evidence.push_back(note);
      if (verdict == TailVerdict::inconclusive)
        throw inconclusive_error("saturation test inconclusive for valuation " + std::to_string(i + 1) +
                                 " at box edge " + std::to_string(V) + "; enlarge that bound to at least " +
                                 std::to_string(2 * V));
      auto cands = candidates_for(gens, V);
      singles[i].push_back(shape_of(cands[0].model, 0));
      if (verdict == TailVerdict::curve) continue;
      // A profile still growing at the box edge fits a divisorial valuation, or a curve
      // whose contact with the others exceeds the window; both go to forward verification.
      auto ray = ray_points(S, i);
      std::vector<std::int64_t> self;
      for (const auto& p : ray) self.push_back(p[i]);
      if (!ray.empty()) {
        std::string pts;
        for (const auto& p : ray) pts += " " + to_string(p);
        rep.evidence.push_back("valuation " + std::to_string(i + 1) + ": boundary ray members" + pts +
                               "; divisor self value must be one of their coordinates");
      }
      for (std::size_t c = 1; c < cands.size(); ++c) {
        const auto& m = cands[c].model;
        auto value = m.curvette_values(m.valuation(0).last())[0];
        if (!ray.empty() && std::find(self.begin(), self.end(), value) == self.end()) continue;
        singles[i].push_back(shape_of(m, 0));
      }
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        ReconstructionReport::Pair pr{i, j, std::nullopt, {}, -1};
        LatticePoint up{psg.box().upper()[i], psg.box().upper()[j]};
        std::vector<LatticePoint> proj;
        for (const auto& v : S.members()) proj.push_back({v[i], v[j]});
        auto pair_s = semigroup_from_members(Box(up), proj);
        try {
          pr.criterion = splitting_value(pair_s, singles[i][0].weights[0], singles[j][0].weights[0]);
        } catch (const Error& e) {
          rep.evidence.push_back("pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ": diagonal criterion not found in box (" + e.what() + ")");
        }
        std::vector<int> ks;
        for (const auto& a : singles[i])
          for (const auto& b : singles[j])
            for (int k : all_splits(a, b, psg.box())) {
              if (std::find(ks.begin(), ks.end(), k) != ks.end()) continue;
              if (r > 2) {
                // the projected support only lists members of the pair semigroup
                auto split = split_table(2);
                split[0][1] = split[1][0] = k;
                auto mine = semigroup_in_box(glue_shapes({a, b}, split), Box(up));
                bool covers = true;
                for (const auto& v : proj) covers = covers && mine.contains(v);
                if (!covers) continue;
              }
              ks.push_back(k);
            }
        std::sort(ks.begin(), ks.end());
        pr.candidates = ks;
        if (pr.candidates.empty())
          throw verification_error("pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   ": no splitting point is compatible with the support");
        rep.pairs.push_back(pr);
      }
    choose_by_forward_verification(rep, singles, psg);
  }
  for (const auto& v : rep.model.valuations()) {
    rep.kinds.push_back(to_string(v.kind));
    rep.normalizations.push_back(v.normalization());
  }
  rep.residual = residual(recompute(rep.model, psg), psg);
  rep.success = rep.residual == 0;
  return rep;
}

ReconstructionReport reconstruct_from_hilbert(const SparseSeries& hs) {
  auto rep = reconstruct_from_generalized(generalized_from_hilbert(hs));
  rep.entry = "hilbert";
  rep.residual = residual(recompute(rep.model, hs), hs);
  rep.success = rep.residual == 0;
  return rep;
}

Json ReconstructionReport::to_json() const {
  Json pj = Json::array();
  for (const auto& p : pairs) {
    Json j{{"i", p.i + 1}, {"j", p.j + 1}, {"candidates", p.candidates}, {"split_index", p.split}};
    if (p.criterion) {
      j["splitting_value"] = rational_json(p.criterion->c);
      j["point"] = p.criterion->point;
      j["witness"] = p.criterion->witness;
      j["witness_tie"] = p.criterion->tie();
    }
    pj.push_back(j);
  }
  Json out{{"entry", entry},       {"success", success},   {"kinds", kinds},
           {"normalizations", normalizations},             {"generators", generators},
           {"pairs", pj},          {"evidence", evidence}, {"residual", residual}};
  if (model.r() > 0) {
    out["model"] = model_to_json(model);
    out["canonical_form"] = model.canonical_form();
  }
  if (isomorphic_to_reference) out["isomorphic_to_reference"] = *isomorphic_to_reference;
  return out;
}

bool RoundtripReport::all_isomorphic() const {
  for (const auto* r : {&from_generalized, &from_semigroup, &from_hilbert})
    if (!r->success || !r->isomorphic_to_reference.value_or(false)) return false;
  return true;
}

Json RoundtripReport::to_json() const {
  return Json{{"generalized", from_generalized.to_json()},
              {"semigroup", from_semigroup.to_json()},
              {"hilbert", from_hilbert.to_json()},
              {"all_isomorphic", all_isomorphic()}};
}

namespace {

// The coefficient at the origin is 1 for every collection, so no model reproduces the result.
void corrupt_series(SparseSeries& s) {
  const LatticePoint origin(s.r(), 0);
  s.set(origin, s.at(origin) + IntPoly::constant(1));
}

ReconstructionReport guarded(const std::string& entry, const CollectionModel& reference,
                             const std::function<ReconstructionReport()>& run) {
  ReconstructionReport rep;
  try {
    rep = run();
  } catch (const Error& e) {
    rep = ReconstructionReport{};
    rep.entry = entry;
    rep.success = false;
    rep.evidence.push_back(std::string("failed: ") + e.what());
    rep.isomorphic_to_reference = false;
    return rep;
  }
  rep.isomorphic_to_reference = rep.success && is_isomorphic(rep.model, reference);
  return rep;
}

}  // namespace

RoundtripReport roundtrip(const CollectionModel& model, const Box& box, bool corrupt) {
  auto big = compute_series(model, box.grown(1));
  auto pg = big.generalized.restricted(box);
  auto psg = big.semigroup.restricted(box);
  auto hs = big.hilbert;
  if (corrupt) {
    corrupt_series(pg);
    corrupt_series(psg);
    hs.set(LatticePoint(hs.r(), 0), IntPoly::constant(1));  // h(0) = 0 always
  }
  RoundtripReport out;
  out.from_generalized = guarded("generalized", model, [&] { return reconstruct_from_generalized(pg); });
  out.from_semigroup = guarded("semigroup", model, [&] { return reconstruct_from_semigroup_series(psg); });
  out.from_hilbert = guarded("hilbert", model, [&] { return reconstruct_from_hilbert(hs); });
  return out;
}

}  // namespace planeval
