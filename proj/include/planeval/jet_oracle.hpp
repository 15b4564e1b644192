#pragma once

#include <vector>

#include "planeval/model.hpp"
#include "planeval/poly.hpp"

namespace planeval {

// Jet-space condition tables for one model, precomputed up to a value bound.
// 
// A germ of multiplicity > D has every value > D, so with D = max v_i the ideal J(v)
// contains all monomials of degree > D and h(v) is the rank of the conditions on
// the monomials x^a y^b, a + b <= D. A curve condition nu_i >= v_i asks the first v_i
// coefficients of g(x_i(t), y_i(t)) to vanish. A divisorial condition asks the same of
// the generic curvette (t^n, ... + s t^{en}) identically in s, i.e. every coefficient
// of t^e s^j with e < v_i vanishes.
// 
// All methods are const and safe to call concurrently.
class JetOracle {
 public:
  JetOracle(const CollectionModel& model, int max_value);

  int max_value() const { return max_value_; }
  // Requires max v_i <= max_value.
  std::int64_t h(const LatticePoint& v) const;
  // Requires max v_i < max_value.
  bool membership(const LatticePoint& v) const;
  IntPoly fiber_class(const LatticePoint& v) const;

 private:
  // pullback_[i][col][e][j]: coefficient of t^e s^j in x^a y^b along valuation i
  std::vector<std::vector<std::vector<std::vector<Rational>>>> pullback_;
  int r_ = 0;
  int max_value_ = 0;
};

// Column of x^a y^b in the degree-major monomial order.
inline int monomial_index(int a, int b) {
  const int d = a + b;
  return d * (d + 1) / 2 + b;
}

}  // namespace planeval
