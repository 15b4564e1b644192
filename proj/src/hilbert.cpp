#include "planeval/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <set>

namespace planeval {

DivisorOnTree constraint_divisor(const CollectionModel& model, const LatticePoint& v) {
  if (static_cast<int>(v.size()) != model.r()) throw invariant_error("value vector dimension mismatch");
  DivisorOnTree d(model.tree().size(), 0);
  for (int i = 0; i < model.r(); ++i) {
    if (v[i] < 0) throw invariant_error("negative value in constraint");
    if (v[i] == 0) continue;
    const auto& path = model.valuation(i).path;
    const int k = model.condition_index(i, v[i]);
    if (k >= static_cast<int>(path.size()))
      throw invariant_error("curve tail of valuation " + std::to_string(i) + " not materialized to depth " +
                            std::to_string(k));
    d[path[k]] = std::max<std::int64_t>(d[path[k]], v[i]);
  }
  return d;
}

std::vector<std::int64_t> derived_multiplicities(const ProximityTree& tree, const DivisorOnTree& d) {
  std::vector<std::int64_t> m(tree.size());
  for (int s = 0; s < tree.size(); ++s) {
    m[s] = d[s];
    for (int rho : tree.proximate_to(s)) m[s] -= d[rho];
  }
  return m;
}

namespace {

std::int64_t excess(const ProximityTree& tree, const DivisorOnTree& d, int s) {
  auto mult = [&](int x) {
    std::int64_t m = d[x];
    for (int rho : tree.proximate_to(x)) m -= d[rho];
    return m;
  };
  std::int64_t e = mult(s);
  for (int tau : tree.vertex(s).proximate_from) e -= mult(tau);
  return e;
}

}  // namespace

DivisorOnTree antinef_closure(const ProximityTree& tree, DivisorOnTree d, std::mt19937_64* rng) {
  if (static_cast<int>(d.size()) != tree.size()) throw invariant_error("divisor does not match the tree");
  std::set<int> pending;
  for (int s = 0; s < tree.size(); ++s) pending.insert(s);
  while (!pending.empty()) {
    auto it = pending.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*rng));
    const int s = *it;
    pending.erase(it);
    const auto e = excess(tree, d, s);
    if (e >= 0) continue;
    const auto& from = tree.vertex(s).proximate_from;
    const std::int64_t k = static_cast<std::int64_t>(from.size()) + 1;
    d[s] += (-e + k - 1) / k;
    // Raising w_s changes m_s and the m of every vertex proximate to s; recheck every
    // excess that reads one of those multiplicities.
    pending.insert(s);
    for (int rho : tree.proximate_to(s)) pending.insert(rho);
    for (int tau : from) {
      pending.insert(tau);
      for (int rho : tree.proximate_to(tau)) pending.insert(rho);
    }
  }
  return d;
}

bool is_antinef(const ProximityTree& tree, const DivisorOnTree& d) {
  if (static_cast<int>(d.size()) != tree.size()) return false;
  for (int s = 0; s < tree.size(); ++s)
    if (excess(tree, d, s) < 0) return false;
  return true;
}

std::int64_t codim(const ProximityTree& tree, const DivisorOnTree& d) {
  if (!is_antinef(tree, d)) throw invariant_error("codim: divisor is not antinef");
  std::int64_t total = 0;
  for (auto m : derived_multiplicities(tree, d)) total += m * (m + 1) / 2;
  return total;
}

FiberData fiber_data_from(const BoxTable& h, const LatticePoint& v) {
  const int r = static_cast<int>(v.size());
  auto all = v;
  for (auto& x : all) ++x;
  FiberData f;
  f.h_plus = h.at(all);
  f.dims.resize(std::size_t{1} << r);
  for (std::size_t mask = 0; mask < f.dims.size(); ++mask) {
    auto w = v;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) ++w[i];
    f.dims[mask] = f.h_plus - h.at(w);
    if (f.dims[mask] < 0) throw invariant_error("Hilbert function not monotone at " + to_string(v));
  }
  f.p = fiber_class_from_dims(f.dims);
  return f;
}

HilbertEngine::HilbertEngine(const CollectionModel& model, const LatticePoint& upper)
    : model_(model.with_tails_for(upper)), upper_(upper) {}

std::int64_t HilbertEngine::h(const LatticePoint& v) const {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > upper_.at(i)) throw invariant_error("HilbertEngine: value beyond the prepared box");
  return codim(model_.tree(), antinef_closure(model_.tree(), constraint_divisor(model_, v)));
}

FiberData HilbertEngine::fiber_data(const LatticePoint& v) const {
  const int r = static_cast<int>(v.size());
  auto all = v;
  for (auto& x : all) ++x;
  BoxTable local{Box(all), {}};
  local.values.assign(local.box.size(), 0);
  // only the 2^r corners v + e_I are read
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    auto w = v;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) ++w[i];
    local.values[local.box.index(w)] = h(w);
  }
  return fiber_data_from(local, v);
}

std::int64_t h(const CollectionModel& model, const LatticePoint& v) {
  return HilbertEngine(model, v).h(v);
}

FiberData fiber_data(const CollectionModel& model, const LatticePoint& v) {
  auto up = v;
  for (auto& x : up) ++x;
  return HilbertEngine(model, up).fiber_data(v);
}

}  // namespace planeval
