#include "planeval/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "planeval/jet_oracle.hpp"

namespace planeval {

// ---------------------------------------------------------------------------
// GermPolynomial

GermPolynomial GermPolynomial::monomial(const Rational& c, int a, int b) {
  GermPolynomial g;
  g.add_term({a, b}, c);
  return g;
}

void GermPolynomial::add_term(const std::pair<int, int>& exp, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

int GermPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : c_) d = std::max(d, e.first + e.second);
  return d;
}

GermPolynomial GermPolynomial::operator+(const GermPolynomial& o) const {
  GermPolynomial r = *this;
  for (const auto& [e, c] : o.c_) r.add_term(e, c);
  return r;
}

GermPolynomial GermPolynomial::operator-(const GermPolynomial& o) const {
  GermPolynomial r = *this;
  for (const auto& [e, c] : o.c_) r.add_term(e, -c);
  return r;
}

GermPolynomial GermPolynomial::operator*(const GermPolynomial& o) const {
  GermPolynomial r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<Rational> GermPolynomial::compose(const BranchPolynomials& branch) const {
  std::vector<std::vector<Rational>> xp{{Rational(1)}}, yp{{Rational(1)}};
  std::vector<Rational> out;
  for (const auto& [e, c] : c_) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(poly_mul(xp.back(), branch.x));
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(poly_mul(yp.back(), branch.y));
    auto term = poly_mul(xp[e.first], yp[e.second]);
    if (term.size() > out.size()) out.resize(term.size(), Rational(0));
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += c * term[k];
  }
  poly_trim(out);
  return out;
}

// ---------------------------------------------------------------------------
// Parameterizations

std::pair<TruncatedPowerSeries, TruncatedPowerSeries> branch_parameterization(const PuiseuxDatum& datum,
                                                                              int T) {
  if (datum.kind != ValuationKind::curve)
    throw invariant_error("branch_parameterization: datum is divisorial; use curvette_family");
  datum.validate();
  int top = datum.n;
  for (const auto& t : datum.terms) top = std::max(top, t.exponent);
  if (T <= top) throw invariant_error("order bound " + std::to_string(T) + " does not exceed the largest exponent " +
                                      std::to_string(top));
  std::vector<Rational> x(datum.n + 1, Rational(0)), y(top + 1, Rational(0));
  x[datum.n] = 1;
  for (const auto& t : datum.terms) y[t.exponent] = t.coefficient;
  if (datum.swap) std::swap(x, y);
  return {to_series(x, T), to_series(y, T)};
}

namespace {

const PuiseuxDatum& source_of(const CollectionModel& model, int i) {
  const auto& v = model.valuation(i);
  if (!v.source) throw invariant_error("valuation " + std::to_string(i) + " has no Puiseux datum for the oracle");
  return *v.source;
}

std::vector<Rational> default_pool() {
  std::vector<Rational> pool;
  for (int s = 1; s <= 1024; ++s) pool.emplace_back(s);
  return pool;
}

}  // namespace

std::vector<BranchPolynomials> curvette_family(const CollectionModel& model, int i, int count) {
  return curvette_family(model, i, count, default_pool());
}

std::vector<BranchPolynomials> curvette_family(const CollectionModel& model, int i, int count,
                                               const std::vector<Rational>& pool) {
  const auto& d = source_of(model, i);
  if (d.kind != ValuationKind::divisorial)
    throw invariant_error("curvette_family: valuation " + std::to_string(i) + " is not divisorial");
  if (count <= 0) throw invariant_error("curvette_family: count must be positive");
  std::vector<Rational> params;
  for (const auto& s : pool) {
    if (s == 0) continue;
    if (std::find(params.begin(), params.end(), s) == params.end()) params.push_back(s);
    if (static_cast<int>(params.size()) == count) break;
  }
  if (static_cast<int>(params.size()) < count)
    throw invariant_error("curvette_family: parameter pool has only " + std::to_string(params.size()) +
                          " distinct nonzero values, " + std::to_string(count) + " requested");
  std::vector<BranchPolynomials> out;
  for (const auto& s : params) out.push_back(branch_polynomials(d, s));
  return out;
}

ValueVector value_of(const CollectionModel& model, const GermPolynomial& g) {
  ValueVector out(model.r(), kInfinity);
  if (g.is_zero()) return out;
  auto ord = [](const std::vector<Rational>& p) -> std::int64_t {
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0) return static_cast<std::int64_t>(k);
    return kInfinity;  // the composition is the zero polynomial: g vanishes on the branch
  };
  for (int i = 0; i < model.r(); ++i) {
    const auto& d = source_of(model, i);
    if (d.kind == ValuationKind::curve) {
      out[i] = ord(g.compose(branch_polynomials(d)));
    } else {
      // At most deg(g)*n members meet the strict transform of g on the divisor.
      for (const auto& member : curvette_family(model, i, g.degree() * d.n + 1))
        out[i] = std::min(out[i], ord(g.compose(member)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jet-space linear algebra

int exact_rank(const std::vector<std::vector<Rational>>& rows) {
  std::map<std::size_t, std::vector<Integer>> basis;  // pivot column -> row with that leading entry
  for (const auto& r : rows) {
    auto row = primitive_integer_row(r);
    for (;;) {
      auto lead = std::find_if(row.begin(), row.end(), [](const Integer& z) { return z != 0; });
      if (lead == row.end()) break;
      const std::size_t col = static_cast<std::size_t>(lead - row.begin());
      auto it = basis.find(col);
      if (it == basis.end()) {
        basis.emplace(col, std::move(row));
        break;
      }
      const Integer a = it->second[col];
      const Integer b = row[col];
      Integer content = 0;
      for (std::size_t k = col; k < row.size(); ++k) {
        row[k] = a * row[k] - b * it->second[k];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[k].get_mpz_t());
      }
      if (content > 1)
        for (std::size_t k = col; k < row.size(); ++k)
          mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), content.get_mpz_t());
    }
  }
  return static_cast<int>(basis.size());
}

std::int64_t oracle_h(const CollectionModel& model, const LatticePoint& v) {
  int top = 0;
  for (int x : v) top = std::max(top, x);
  return JetOracle(model, top).h(v);
}

bool oracle_membership(const CollectionModel& model, const LatticePoint& v) {
  int top = 0;
  for (int x : v) top = std::max(top, x);
  return JetOracle(model, top + 1).membership(v);
}

IntPoly oracle_fiber_class(const CollectionModel& model, const LatticePoint& v) {
  int top = 0;
  for (int x : v) top = std::max(top, x);
  return JetOracle(model, top + 1).fiber_class(v);
}

}  // namespace planeval
