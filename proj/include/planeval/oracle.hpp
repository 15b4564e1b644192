#pragma once

#include <map>
#include <utility>
#include <vector>

#include "planeval/model.hpp"
#include "planeval/poly.hpp"
#include "planeval/truncated_series.hpp"

namespace planeval {

// Bivariate polynomial g(x, y) with rational coefficients.
class GermPolynomial {
 public:
  GermPolynomial() = default;
  static GermPolynomial monomial(const Rational& c, int a, int b);
  static GermPolynomial x() { return monomial(1, 1, 0); }
  static GermPolynomial y() { return monomial(1, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }

  GermPolynomial operator+(const GermPolynomial& o) const;
  GermPolynomial operator-(const GermPolynomial& o) const;
  GermPolynomial operator*(const GermPolynomial& o) const;

  // g(x(t), y(t)) as an exact polynomial in t.
  std::vector<Rational> compose(const BranchPolynomials& branch) const;

 private:
  void add_term(const std::pair<int, int>& exp, const Rational& c);
  std::map<std::pair<int, int>, Rational> c_;
};

// (x(t), y(t)) of a curve datum known modulo t^T.
std::pair<TruncatedPowerSeries, TruncatedPowerSeries> branch_parameterization(const PuiseuxDatum& datum,
                                                                              int T);

// Members of the curvette family of divisorial valuation i with parameters taken from
// `pool` in order (the default pool is 1, 2, ..., 1024).
std::vector<BranchPolynomials> curvette_family(const CollectionModel& model, int i, int count);
std::vector<BranchPolynomials> curvette_family(const CollectionModel& model, int i, int count,
                                               const std::vector<Rational>& pool);

// (nu_1(g), ..., nu_r(g)) in the unnormalized scale; kInfinity for g vanishing on a branch.
ValueVector value_of(const CollectionModel& model, const GermPolynomial& g);

// dim O/J(v) by exact rank of the linear conditions on the jet space of degree max v_i.
std::int64_t oracle_h(const CollectionModel& model, const LatticePoint& v);
bool oracle_membership(const CollectionModel& model, const LatticePoint& v);
IntPoly oracle_fiber_class(const CollectionModel& model, const LatticePoint& v);

// Exact rank of a rational matrix (fraction-free elimination on primitive integer rows).
int exact_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace planeval
