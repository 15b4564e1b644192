#pragma once

#include <optional>
#include <vector>

#include "planeval/rational.hpp"

namespace planeval {

// Power series in one variable t with exact rational coefficients, known
// modulo t^bound. Arithmetic propagates the bound.
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries() = default;
  TruncatedPowerSeries(std::vector<Rational> coefficients, int bound);

  static TruncatedPowerSeries monomial(const Rational& c, int exponent, int bound);
  static TruncatedPowerSeries zero(int bound) { return {{}, bound}; }

  int bound() const { return bound_; }
  // Coefficient of t^k; k must be below the bound.
  Rational coefficient(int k) const;
  // Order of the first nonzero coefficient below the bound, if any.
  std::optional<int> order() const;
  // Order, or the bound when every known coefficient vanishes.
  int order_or_bound() const;

  TruncatedPowerSeries operator+(const TruncatedPowerSeries& o) const;
  TruncatedPowerSeries operator-(const TruncatedPowerSeries& o) const;
  TruncatedPowerSeries operator*(const TruncatedPowerSeries& o) const;
  TruncatedPowerSeries scaled(const Rational& c) const;
  TruncatedPowerSeries minus_constant(const Rational& c) const;

  // Quotient f/g. Requires g to have a known order not exceeding ord f.
  friend TruncatedPowerSeries divide(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);

  bool operator==(const TruncatedPowerSeries& o) const;

 private:
  void trim();

  std::vector<Rational> c_;  // c_[k] for k < min(size, bound); trailing zeros trimmed
  int bound_ = 0;
};

}  // namespace planeval
