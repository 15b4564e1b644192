#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeval/rational.hpp"
#include "planeval/truncated_series.hpp"

namespace planeval {

enum class ValuationKind { curve, divisorial };

std::string to_string(ValuationKind kind);

struct PuiseuxTerm {
  int exponent = 0;  // numerator k of the exponent k/n
  Rational coefficient;
  bool operator==(const PuiseuxTerm&) const = default;
};

// A rank-one plane valuation given by a parameterization t -> (t^n, sum a_k t^k).
// 
// Curve data describe the branch itself. Divisorial data describe the family of
// curvettes (t^n, sum_{k < e n} a_k t^k + s t^{e n}) for generic s, where e is the
// truncation exponent; the divisor is the one separating the members of that family.
// A term whose exponent equals e is the slot taken by the generic parameter and is
// ignored. With `swap` set, the roles of x and y are exchanged (so n = 1, no terms,
// swap = true is the branch x = 0).
struct PuiseuxDatum {
  ValuationKind kind = ValuationKind::curve;
  int n = 1;
  std::vector<PuiseuxTerm> terms;
  std::optional<Rational> truncation;
  bool swap = false;

  // Throws Error(invariant) describing the first violated invariant.
  void validate() const;

  // Integer exponent e*n of the generic term (divisorial only).
  int generic_exponent() const;

  bool operator==(const PuiseuxDatum&) const = default;
};

// Exact parameterization of a single branch as a pair of polynomials in t.
struct BranchPolynomials {
  std::vector<Rational> x;  // coefficient of t^k at index k
  std::vector<Rational> y;
};

// The branch of a curve datum, or the member with parameter s of a divisorial
// datum's curvette family, reduced to a primitive parameterization.
BranchPolynomials branch_polynomials(const PuiseuxDatum& datum, const Rational& s = 1);

// Polynomial in t to truncated power series with the given bound.
TruncatedPowerSeries to_series(const std::vector<Rational>& poly, int bound);

PuiseuxDatum make_curve(int n, std::vector<PuiseuxTerm> terms, bool swap = false);
PuiseuxDatum make_divisorial(int n, std::vector<PuiseuxTerm> terms, Rational truncation,
                             bool swap = false);

}  // namespace planeval
