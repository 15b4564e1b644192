#include "planeval/jet_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "planeval/oracle.hpp"

namespace planeval {

namespace {

// Truncated series in t with polynomial coefficients in s: p[e][j] = coefficient of t^e s^j.
using BiSeries = std::vector<std::vector<Rational>>;

BiSeries bi_mul(const BiSeries& a, const BiSeries& b, int bound) {
  BiSeries out(bound);
  for (int e1 = 0; e1 < static_cast<int>(a.size()) && e1 < bound; ++e1) {
    if (a[e1].empty()) continue;
    for (int e2 = 0; e2 < static_cast<int>(b.size()) && e1 + e2 < bound; ++e2) {
      if (b[e2].empty()) continue;
      auto& dst = out[e1 + e2];
      if (dst.size() < a[e1].size() + b[e2].size() - 1) dst.resize(a[e1].size() + b[e2].size() - 1, Rational(0));
      for (std::size_t j1 = 0; j1 < a[e1].size(); ++j1) {
        if (a[e1][j1] == 0) continue;
        for (std::size_t j2 = 0; j2 < b[e2].size(); ++j2) dst[j1 + j2] += a[e1][j1] * b[e2][j2];
      }
    }
  }
  return out;
}

// (x(t, s), y(t, s)) of the generic member of valuation i.
std::pair<BiSeries, BiSeries> generic_member(const PuiseuxDatum& d, int bound) {
  std::vector<std::pair<int, std::vector<Rational>>> ys;  // exponent, polynomial in s
  if (d.kind == ValuationKind::curve) {
    for (const auto& t : d.terms) ys.push_back({t.exponent, {t.coefficient}});
  } else {
    const int en = d.generic_exponent();
    for (const auto& t : d.terms)
      if (t.exponent < en) ys.push_back({t.exponent, {t.coefficient}});
    ys.push_back({en, {Rational(0), Rational(1)}});
  }
  int g = d.n;
  for (const auto& [k, c] : ys) g = std::gcd(g, k);
  BiSeries x(bound), y(bound);
  if (d.n / g < bound) x[d.n / g] = {Rational(1)};
  for (const auto& [k, c] : ys)
    if (k / g < bound) y[k / g] = c;
  if (d.swap) std::swap(x, y);
  return {x, y};
}

}  // namespace

JetOracle::JetOracle(const CollectionModel& model, int max_value) : r_(model.r()), max_value_(max_value) {
  if (max_value < 0) throw invariant_error("negative jet bound");
  const int D = max_value;
  const int bound = max_value;
  const int cols = (D + 1) * (D + 2) / 2;
  pullback_.resize(r_);
  for (int i = 0; i < r_; ++i) {
    const auto& src = model.valuation(i).source;
    if (!src) throw invariant_error("valuation " + std::to_string(i) + " has no Puiseux datum for the oracle");
    auto [x, y] = generic_member(*src, bound);
    BiSeries one(bound);
    if (bound > 0) one[0] = {Rational(1)};
    std::vector<BiSeries> xp{one}, yp{one};
    for (int a = 1; a <= D; ++a) xp.push_back(bi_mul(xp.back(), x, bound));
    for (int b = 1; b <= D; ++b) yp.push_back(bi_mul(yp.back(), y, bound));
    auto& table = pullback_[i];
    table.resize(cols);
    for (int d = 0; d <= D; ++d)
      for (int b = 0; b <= d; ++b) table[monomial_index(d - b, b)] = bi_mul(xp[d - b], yp[b], bound);
  }
}

std::int64_t JetOracle::h(const LatticePoint& v) const {
  if (static_cast<int>(v.size()) != r_) throw invariant_error("oracle_h: dimension mismatch");
  int D = 0;
  for (int x : v) {
    if (x < 0) throw invariant_error("oracle_h: negative value");
    D = std::max(D, x);
  }
  if (D == 0) return 0;
  if (D > max_value_) throw invariant_error("oracle_h: value beyond the precomputed jet bound");
  const int cols = (D + 1) * (D + 2) / 2;
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < r_; ++i) {
    const auto& table = pullback_[i];
    for (int e = 0; e < v[i]; ++e) {
      std::size_t sdeg = 0;
      for (int c = 0; c < cols; ++c) sdeg = std::max(sdeg, table[c][e].size());
      for (std::size_t j = 0; j < sdeg; ++j) {
        std::vector<Rational> row(cols, Rational(0));
        bool any = false;
        for (int c = 0; c < cols; ++c)
          if (j < table[c][e].size() && table[c][e][j] != 0) {
            row[c] = table[c][e][j];
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  return exact_rank(rows);
}

bool JetOracle::membership(const LatticePoint& v) const {
  const auto base = h(v);
  for (int i = 0; i < r_; ++i) {
    auto w = v;
    ++w[i];
    if (h(w) == base) return false;
  }
  return true;
}

IntPoly JetOracle::fiber_class(const LatticePoint& v) const {
  auto all = v;
  for (auto& x : all) ++x;
  const auto top = h(all);
  std::vector<std::int64_t> dims(std::size_t{1} << r_);
  for (std::size_t mask = 0; mask < dims.size(); ++mask) {
    auto w = v;
    for (int i = 0; i < r_; ++i)
      if (mask >> i & 1) ++w[i];
    dims[mask] = top - h(w);
  }
  return fiber_class_from_dims(dims);
}

}  // namespace planeval
