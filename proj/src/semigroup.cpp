#include "planeval/semigroup.hpp"

#include <algorithm>
#include <optional>

namespace planeval {

std::vector<LatticePoint> SemigroupBox::members() const {
  std::vector<LatticePoint> out;
  for (std::size_t k = 0; k < member.size(); ++k)
    if (member[k]) out.push_back(box.point(k));
  return out;
}

SemigroupBox semigroup_in_box(const CollectionModel& model, const Box& box) {
  if (box.r() != model.r()) throw invariant_error("semigroup_in_box: box dimension mismatch");
  const auto full = model.with_tails_for(box.upper());
  SemigroupBox s{box, std::vector<char>(box.size(), 0), {}};
  for (int id = 0; id < full.tree().size(); ++id) {
    auto g = full.curvette_values(id);
    if (std::find(s.generators.begin(), s.generators.end(), g) == s.generators.end()) s.generators.push_back(g);
  }
  std::sort(s.generators.begin(), s.generators.end());
  s.member[0] = 1;
  // Lexicographic order visits v before v + g for every nonzero g >= 0.
  for (std::size_t k = 0; k < box.size(); ++k) {
    if (!s.member[k]) continue;
    const auto v = box.point(k);
    for (const auto& g : s.generators) {
      LatticePoint w(v.size());
      bool inside = true;
      for (std::size_t i = 0; i < v.size() && inside; ++i) {
        if (g[i] > box.upper()[i] - v[i]) inside = false;
        else w[i] = v[i] + static_cast<int>(g[i]);
      }
      if (inside) s.member[box.index(w)] = 1;
    }
  }
  return s;
}

SemigroupBox semigroup_from_members(const Box& box, const std::vector<LatticePoint>& members) {
  SemigroupBox s{box, std::vector<char>(box.size(), 0), {}};
  for (const auto& v : members) s.member[box.index(v)] = 1;
  return s;
}

std::optional<std::pair<LatticePoint, LatticePoint>> closure_violation(const SemigroupBox& s) {
  const auto mem = s.members();
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t b = a; b < mem.size(); ++b) {
      LatticePoint w(mem[a].size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = mem[a][i] + mem[b][i];
      if (s.box.contains(w) && !s.contains(w)) return std::make_pair(mem[a], mem[b]);
    }
  return std::nullopt;
}

std::vector<int> minimal_generators_r1(const SemigroupBox& s) {
  if (s.box.r() != 1) throw invariant_error("minimal_generators_r1: semigroup is not one-dimensional");
  const int V = s.box.upper()[0];
  auto in = [&](int x) { return x >= 0 && x <= V && s.member[x]; };
  int g0 = 0;
  for (int x = 1; x <= V && !g0; ++x)
    if (in(x)) g0 = x;
  if (!g0) throw invariant_error("minimal_generators_r1: no positive member in the box");
  int run_start = -1;
  for (int c = 1; c + g0 - 1 <= V; ++c) {
    bool run = true;
    for (int x = c; x < c + g0 && run; ++x) run = in(x);
    if (run) {
      run_start = c;
      break;
    }
  }
  if (run_start < 0)
    throw invariant_error("minimal_generators_r1: box edge " + std::to_string(V) +
                          " too small to certify the generators (no run of " + std::to_string(g0) +
                          " consecutive members)");
  // Every member >= run_start + g0 is g0 plus a member, so generators lie below it.
  std::vector<int> gens;
  for (int m = 1; m < run_start + g0; ++m) {
    if (!in(m)) continue;
    bool decomposable = false;
    for (int a = 1; a <= m / 2 && !decomposable; ++a) decomposable = in(a) && in(m - a);
    if (!decomposable) gens.push_back(m);
  }
  return gens;
}

SplittingValue splitting_value(const SemigroupBox& s, std::int64_t m1, std::int64_t m2) {
  if (s.box.r() != 2) throw invariant_error("splitting_value: semigroup is not two-dimensional");
  if (m1 <= 0 || m2 <= 0) throw invariant_error("splitting_value: normalizations must be positive");
  const auto& up = s.box.upper();
  for (std::int64_t a = 1; a <= up[0]; ++a) {
    if ((a * m2) % m1) continue;
    const std::int64_t b = a * m2 / m1;
    if (b > up[1]) break;
    const LatticePoint p{static_cast<int>(a), static_cast<int>(b)};
    if (!s.contains(p)) continue;
    SplittingValue out;
    out.c = make_rational(a, m1);
    out.point = p;
    std::optional<LatticePoint> best;
    for (int y = 0; y <= up[1]; ++y) {
      LatticePoint w{p[0], y};
      if (y != p[1] && s.contains(w)) {
        ++out.witnesses_first;
        if (!best || w < *best) best = w;
      }
    }
    for (int x = 0; x <= up[0]; ++x) {
      LatticePoint w{x, p[1]};
      if (x != p[0] && s.contains(w)) {
        ++out.witnesses_second;
        if (!best || w < *best) best = w;
      }
    }
    if (best) {
      out.witness = *best;
      return out;
    }
  }
  throw invariant_error("splitting_value: no diagonal member with a witness inside the box");
}

}  // namespace planeval
