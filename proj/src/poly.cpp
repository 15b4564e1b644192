#include "planeval/poly.hpp"

#include <algorithm>
#include <bit>

#include "planeval/rational.hpp"

namespace planeval {

IntPoly::IntPoly(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(std::int64_t c, int exponent) {
  if (exponent < 0) throw invariant_error("negative exponent in polynomial");
  std::vector<std::int64_t> v(exponent + 1, 0);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::geometric(int d) {
  if (d < 0) throw invariant_error("negative fiber dimension");
  return IntPoly(std::vector<std::int64_t>(d, 1));
}

int IntPoly::lowest_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

std::int64_t IntPoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0;
}

std::int64_t IntPoly::at_one() const {
  std::int64_t s = 0;
  for (auto c : c_) s += c;
  return s;
}

IntPoly IntPoly::reciprocal(int shift) const {
  if (is_zero()) return {};
  if (shift < degree()) throw invariant_error("negative power after substitution X -> 1/X");
  std::vector<std::int64_t> v(shift + 1, 0);
  for (int k = 0; k <= degree(); ++k) v[shift - k] = c_[k];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::truncated(int k) const {
  std::vector<std::int64_t> v(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), std::max(k, 0)));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  r += o;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<std::int64_t> v = c_;
  if (o.c_.size() > v.size()) v.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) v[k] -= o.c_[k];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b) v[a + b] += c_[a] * o.c_[b];
  return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    auto c = c_[k];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    auto a = c < 0 ? -c : c;
    if (k == 0 || a != 1) s += std::to_string(a);
    if (k >= 1) s += var;
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

IntPoly fiber_class_from_dims(const std::vector<std::int64_t>& dims) {
  IntPoly p;
  for (std::size_t mask = 0; mask < dims.size(); ++mask) {
    IntPoly g = IntPoly::geometric(static_cast<int>(dims[mask]));
    p = std::popcount(mask) % 2 ? p - g : p + g;
  }
  return p;
}

}  // namespace planeval
