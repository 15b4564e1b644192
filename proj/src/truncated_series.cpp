#include "planeval/truncated_series.hpp"

#include <algorithm>

namespace planeval {

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<Rational> coefficients, int bound)
    : c_(std::move(coefficients)), bound_(bound) {
  if (bound_ < 0) throw invariant_error("negative series bound");
  if (static_cast<int>(c_.size()) > bound_) c_.resize(bound_);
  trim();
}

TruncatedPowerSeries TruncatedPowerSeries::monomial(const Rational& c, int exponent, int bound) {
  std::vector<Rational> v;
  if (exponent < bound) {
    v.assign(exponent + 1, Rational(0));
    v[exponent] = c;
  }
  return {std::move(v), bound};
}

void TruncatedPowerSeries::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational TruncatedPowerSeries::coefficient(int k) const {
  if (k < 0 || k >= bound_) throw invariant_error("coefficient beyond series precision");
  return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

std::optional<int> TruncatedPowerSeries::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return std::nullopt;
}

int TruncatedPowerSeries::order_or_bound() const { return order().value_or(bound_); }

TruncatedPowerSeries TruncatedPowerSeries::operator+(const TruncatedPowerSeries& o) const {
  int b = std::min(bound_, o.bound_);
  std::vector<Rational> v(std::min<std::size_t>(b, std::max(c_.size(), o.c_.size())));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < c_.size()) v[k] += c_[k];
    if (k < o.c_.size()) v[k] += o.c_[k];
  }
  return {std::move(v), b};
}

TruncatedPowerSeries TruncatedPowerSeries::operator-(const TruncatedPowerSeries& o) const {
  return *this + o.scaled(-1);
}

TruncatedPowerSeries TruncatedPowerSeries::scaled(const Rational& c) const {
  auto v = c_;
  for (auto& x : v) x *= c;
  return {std::move(v), bound_};
}

TruncatedPowerSeries TruncatedPowerSeries::minus_constant(const Rational& c) const {
  if (bound_ == 0) return *this;
  auto v = c_;
  if (v.empty()) v.resize(1);
  v[0] -= c;
  return {std::move(v), bound_};
}

TruncatedPowerSeries TruncatedPowerSeries::operator*(const TruncatedPowerSeries& o) const {
  int b = std::min(bound_ + o.order_or_bound(), o.bound_ + order_or_bound());
  std::vector<Rational> v(std::min<std::size_t>(b, c_.size() + o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size() && i + j < v.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return {std::move(v), b};
}

TruncatedPowerSeries divide(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g) {
  auto gb = g.order();
  if (!gb) throw invariant_error("division by a series of unknown order");
  const int b = *gb;
  const int a = f.order_or_bound();
  if (a < b) throw invariant_error("series quotient is not a power series");
  const int bound = std::min(f.bound_ - b, g.bound_ - 2 * b + a);
  if (bound <= 0) return TruncatedPowerSeries::zero(std::max(bound, 0));
  // h = f/g: solve g0 * h = f0 with g0 = g / t^b, f0 = f / t^b.
  std::vector<Rational> h(bound);
  const Rational inv = 1 / g.c_[b];
  for (int k = 0; k < bound; ++k) {
    Rational acc = (k + b) < static_cast<int>(f.c_.size()) ? f.c_[k + b] : Rational(0);
    for (int j = 1; j <= k; ++j) {
      int gi = b + j;
      if (gi >= static_cast<int>(g.c_.size())) break;
      if (g.c_[gi] != 0 && h[k - j] != 0) acc -= g.c_[gi] * h[k - j];
    }
    h[k] = acc * inv;
  }
  return {std::move(h), bound};
}

bool TruncatedPowerSeries::operator==(const TruncatedPowerSeries& o) const {
  return bound_ == o.bound_ && c_ == o.c_;
}

}  // namespace planeval
