#include "planeval/puiseux.hpp"

#include <numeric>

namespace planeval {

std::string to_string(ValuationKind kind) {
  return kind == ValuationKind::curve ? "curve" : "divisorial";
}

void PuiseuxDatum::validate() const {
  if (n <= 0) throw invariant_error("denominator n must be positive");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent <= 0) throw invariant_error("term exponents must be positive");
    if (terms[i].coefficient == 0) throw invariant_error("term coefficients must be nonzero");
    if (i > 0 && terms[i].exponent <= terms[i - 1].exponent)
      throw invariant_error("term exponents must be strictly increasing");
  }
  if (kind == ValuationKind::curve) {
    if (truncation) throw invariant_error("curve datum cannot carry a truncation exponent");
    int g = n;
    for (const auto& t : terms) g = std::gcd(g, t.exponent);
    if (g != 1) throw invariant_error("curve parameterization is not primitive (gcd of n and exponents != 1)");
  } else {
    if (!truncation) throw invariant_error("divisorial datum requires a truncation exponent");
    if (*truncation <= 0) throw invariant_error("truncation exponent must be positive");
    Rational en = *truncation * n;
    if (en.get_den() != 1)
      throw invariant_error("truncation exponent denominator must divide n");
    for (const auto& t : terms)
      if (t.exponent > en.get_num())
        throw invariant_error("divisorial term exponent exceeds the truncation exponent");
  }
}

int PuiseuxDatum::generic_exponent() const {
  if (kind != ValuationKind::divisorial || !truncation)
    throw invariant_error("generic exponent requested for a non-divisorial datum");
  Rational en = *truncation * n;
  return static_cast<int>(to_int64(en.get_num()));
}

BranchPolynomials branch_polynomials(const PuiseuxDatum& datum, const Rational& s) {
  datum.validate();
  std::vector<std::pair<int, Rational>> ys;
  if (datum.kind == ValuationKind::curve) {
    for (const auto& t : datum.terms) ys.emplace_back(t.exponent, t.coefficient);
  } else {
    const int en = datum.generic_exponent();
    for (const auto& t : datum.terms)
      if (t.exponent < en) ys.emplace_back(t.exponent, t.coefficient);
    ys.emplace_back(en, s);
  }
  int n = datum.n;
  int g = n;
  for (const auto& [k, c] : ys) g = std::gcd(g, k);
  n /= g;
  BranchPolynomials out;
  out.x.assign(n + 1, Rational(0));
  out.x[n] = 1;
  int top = 0;
  for (const auto& [k, c] : ys) top = std::max(top, k / g);
  out.y.assign(top + 1, Rational(0));
  for (const auto& [k, c] : ys) out.y[k / g] += c;
  while (!out.y.empty() && out.y.back() == 0) out.y.pop_back();
  if (datum.swap) std::swap(out.x, out.y);
  return out;
}

TruncatedPowerSeries to_series(const std::vector<Rational>& poly, int bound) {
  return {poly, bound};
}

PuiseuxDatum make_curve(int n, std::vector<PuiseuxTerm> terms, bool swap) {
  PuiseuxDatum d{ValuationKind::curve, n, std::move(terms), std::nullopt, swap};
  d.validate();
  return d;
}

PuiseuxDatum make_divisorial(int n, std::vector<PuiseuxTerm> terms, Rational truncation,
                             bool swap) {
  PuiseuxDatum d{ValuationKind::divisorial, n, std::move(terms), std::move(truncation), swap};
  d.validate();
  return d;
}

}  // namespace planeval
