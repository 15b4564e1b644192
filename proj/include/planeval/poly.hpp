#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace planeval {

// Integer polynomial in one formal parameter (𝕃 or q). Trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coefficients);
  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  static IntPoly monomial(std::int64_t c, int exponent);
  // 1 + X + ... + X^{d-1} = (X^d - 1)/(X - 1); zero for d = 0.
  static IntPoly geometric(int d);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Smallest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int lowest_degree() const;
  std::int64_t coefficient(int k) const;
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t at_one() const;

  // X^{shift} p(X^{-1}); requires shift >= degree.
  IntPoly reciprocal(int shift) const;
  // Terms of exponent < k.
  IntPoly truncated(int k) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o);
  bool operator==(const IntPoly& o) const = default;

  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

// p_v(𝕃) = sum over I of (-1)^{|I|} [d_I]_𝕃 where dims[I] is d_I for the subset with bitmask I.
IntPoly fiber_class_from_dims(const std::vector<std::int64_t>& dims);

}  // namespace planeval
