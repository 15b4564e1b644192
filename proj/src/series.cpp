#include "planeval/series.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

namespace planeval {

std::string to_string(Ring ring) {
  switch (ring) {
    case Ring::integer: return "int";
    case Ring::q: return "q";
    case Ring::L: return "L";
  }
  return "?";
}

void SparseSeries::set(const LatticePoint& v, const IntPoly& c) {
  if (!box_.contains(v)) throw invariant_error("series term " + to_string(v) + " outside the box");
  if (ring_ == Ring::integer && c.degree() > 0) throw invariant_error("integer series with a polynomial coefficient");
  if (c.is_zero()) terms_.erase(v);
  else terms_[v] = c;
}

IntPoly SparseSeries::at(const LatticePoint& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? IntPoly{} : it->second;
}

std::vector<LatticePoint> SparseSeries::support() const {
  std::vector<LatticePoint> out;
  for (const auto& [v, c] : terms_) out.push_back(v);
  return out;
}

SparseSeries SparseSeries::restricted(const Box& sub) const {
  SparseSeries out(sub, ring_);
  for (const auto& [v, c] : terms_)
    if (sub.contains(v)) out.terms_[v] = c;
  return out;
}

SeriesBundle series_from_table(const BoxTable& h, const Box& box) {
  SeriesBundle b{SparseSeries(box, Ring::integer), SparseSeries(box, Ring::integer), SparseSeries(box, Ring::q),
                 SparseSeries(box, Ring::L)};
  const auto fibers = fiber_table(h, box);
  for (std::size_t k = 0; k < box.size(); ++k) {
    const auto v = box.point(k);
    const auto& f = fibers[k];
    b.hilbert.set(v, IntPoly::constant(h.at(v)));
    std::int64_t euler = 0;
    for (std::size_t mask = 0; mask < f.dims.size(); ++mask)
      euler += (std::popcount(mask) % 2 ? -1 : 1) * f.dims[mask];
    if (euler != f.p.at_one()) throw invariant_error("fiber class does not evaluate to the Euler characteristic");
    b.poincare.set(v, IntPoly::constant(euler));
    b.semigroup.set(v, f.p);
    if (!f.p.is_zero()) b.generalized.set(v, f.p.reciprocal(static_cast<int>(f.h_plus) - 1));
  }
  return b;
}

SeriesBundle compute_series(const CollectionModel& model, const Box& box, Exec exec) {
  return series_from_table(hilbert_table(model, box.grown(1), exec), box);
}

SparseSeries hilbert_series(const CollectionModel& model, const Box& box) {
  return compute_series(model, box).hilbert;
}
SparseSeries poincare_series(const CollectionModel& model, const Box& box) {
  return compute_series(model, box).poincare;
}
SparseSeries generalized_poincare(const CollectionModel& model, const Box& box) {
  return compute_series(model, box).generalized;
}
SparseSeries semigroup_poincare(const CollectionModel& model, const Box& box) {
  return compute_series(model, box).semigroup;
}

SparseSeries poincare_from_hilbert(const SparseSeries& hs) {
  if (hs.ring() != Ring::integer) throw invariant_error("poincare_from_hilbert: expected an integer series");
  const Box small = hs.box().shrunk(1);
  if (small.empty()) throw invariant_error("poincare_from_hilbert: box too small");
  const int r = hs.r();
  const std::int64_t sign = r % 2 ? 1 : -1;  // (-1)^{r+1}
  SparseSeries out(small, Ring::integer);
  for (std::size_t k = 0; k < small.size(); ++k) {
    auto w = small.point(k);
    for (auto& x : w) ++x;
    std::int64_t acc = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      auto u = w;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) --u[i];
      acc += (std::popcount(mask) % 2 ? -1 : 1) * hs.integer_at(u);
    }
    out.set(small.point(k), IntPoly::constant(sign * acc));
  }
  return out;
}

SparseSeries l_series(const SparseSeries& hs) {
  const Box small = hs.box().shrunk(1);
  if (small.empty()) throw invariant_error("l_series: box too small");
  SparseSeries out(small, Ring::integer);
  for (std::size_t k = 0; k < small.size(); ++k) {
    auto v = small.point(k);
    auto w = v;
    for (auto& x : w) ++x;
    out.set(v, IntPoly::constant(hs.integer_at(w) - hs.integer_at(v)));
  }
  return out;
}

bool l_identity_holds(const SparseSeries& hs, const SparseSeries& l) {
  const Box small = hs.box().shrunk(1);
  for (std::size_t k = 0; k < small.size(); ++k) {
    auto v = small.point(k);  // w = v + 1
    auto w = v;
    for (auto& x : w) ++x;
    if (l.integer_at(v) != hs.integer_at(w) - hs.integer_at(v)) return false;
  }
  return true;
}

int max_projection_precision(const SparseSeries& pg, const std::vector<int>& keep) {
  int K = std::numeric_limits<int>::max();
  for (int j = 0; j < pg.r(); ++j) {
    if (std::find(keep.begin(), keep.end(), j) != keep.end()) continue;
    std::set<int> seen;
    for (const auto& [v, c] : pg.terms()) seen.insert(v[j]);
    K = std::min(K, static_cast<int>(seen.size()));
  }
  return K;
}

SparseSeries project(const SparseSeries& pg, const std::vector<int>& keep, int K) {
  if (pg.ring() != Ring::q) throw invariant_error("project: only q-coefficient series can be projected");
  std::vector<int> idx = keep;
  std::sort(idx.begin(), idx.end());
  if (idx.empty() || std::adjacent_find(idx.begin(), idx.end()) != idx.end() || idx.back() >= pg.r() || idx[0] < 0)
    throw invariant_error("project: invalid index subset");
  const int kmax = max_projection_precision(pg, idx);
  if (K == 0) K = kmax;
  if (K > kmax)
    throw invariant_error("project: box supports q-precision " + std::to_string(kmax) + ", requested " +
                          std::to_string(K));
  LatticePoint up;
  for (int i : idx) up.push_back(pg.box().upper()[i]);
  SparseSeries out(Box(up), Ring::q);
  std::map<LatticePoint, IntPoly> acc;
  for (const auto& [v, c] : pg.terms()) {
    LatticePoint u;
    for (int i : idx) u.push_back(v[i]);
    acc[u] += c;
  }
  for (const auto& [u, c] : acc) out.set(u, c.truncated(K == std::numeric_limits<int>::max() ? c.degree() + 1 : K));
  return out;
}

SparseSeries specialize(const SparseSeries& s) {
  SparseSeries out(s.box(), Ring::integer);
  for (const auto& [v, c] : s.terms()) out.set(v, IntPoly::constant(c.at_one()));
  return out;
}

Json series_to_json(const SparseSeries& s) {
  Json terms = Json::array();
  for (const auto& [v, c] : s.terms()) {
    Json cs = Json::array();
    for (int k = 0; k <= c.degree(); ++k)
      if (c.coefficient(k) != 0) cs.push_back(Json::array({k, c.coefficient(k)}));
    terms.push_back(Json{{"v", v}, {"c", cs}});
  }
  return Json{{"vars", s.r()}, {"box", s.box().upper()}, {"ring", to_string(s.ring())}, {"terms", terms}};
}

SparseSeries series_from_json(const Json& doc) {
  auto fail = [](const std::string& what) { return parse_error("series." + what); };
  if (!doc.is_object()) throw parse_error("series: expected an object");
  for (const char* key : {"vars", "box", "ring", "terms"})
    if (!doc.contains(key)) throw fail(std::string(key) + ": missing field");
  if (!doc["vars"].is_number_integer()) throw fail("vars: expected an integer");
  const int r = doc["vars"].get<int>();
  if (r <= 0) throw fail("vars: must be positive");
  const Json& box = doc["box"];
  if (!box.is_array() || static_cast<int>(box.size()) != r) throw fail("box: expected " + std::to_string(r) + " bounds");
  LatticePoint up;
  for (const auto& b : box) {
    if (!b.is_number_integer() || b.get<int>() < 0) throw fail("box: bounds must be nonnegative integers");
    up.push_back(b.get<int>());
  }
  Ring ring;
  if (doc["ring"] == "int") ring = Ring::integer;
  else if (doc["ring"] == "q") ring = Ring::q;
  else if (doc["ring"] == "L") ring = Ring::L;
  else throw fail("ring: expected \"int\", \"q\" or \"L\"");
  SparseSeries s{Box(up), ring};
  const Json& terms = doc["terms"];
  if (!terms.is_array()) throw fail("terms: expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string at = "terms[" + std::to_string(t) + "]";
    const Json& term = terms[t];
    if (!term.is_object() || !term.contains("v") || !term.contains("c")) throw fail(at + ": expected {\"v\",\"c\"}");
    LatticePoint v;
    if (!term["v"].is_array() || static_cast<int>(term["v"].size()) != r) throw fail(at + ".v: wrong length");
    for (const auto& x : term["v"]) {
      if (!x.is_number_integer()) throw fail(at + ".v: expected integers");
      v.push_back(x.get<int>());
    }
    if (!s.box().contains(v)) throw fail(at + ".v: outside the box");
    std::vector<std::int64_t> coeffs;
    if (!term["c"].is_array()) throw fail(at + ".c: expected [[exp, coef], ...]");
    for (const auto& ec : term["c"]) {
      if (!ec.is_array() || ec.size() != 2 || !ec[0].is_number_integer() || !ec[1].is_number_integer() ||
          ec[0].get<int>() < 0)
        throw fail(at + ".c: expected [[exp, coef], ...]");
      const int e = ec[0].get<int>();
      if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, 0);
      coeffs[e] += ec[1].get<std::int64_t>();
    }
    IntPoly c(coeffs);
    if (ring == Ring::integer && c.degree() > 0) throw fail(at + ".c: integer series with exponent > 0");
    s.set(v, c);
  }
  return s;
}

}  // namespace planeval
