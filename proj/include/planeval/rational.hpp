#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace planeval {

using Integer = mpz_class;
using Rational = mpq_class;

// Marker for an infinite value (a germ vanishing on a branch).
inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

// Base class for every error raised by the library. `kind` selects the CLI exit status.
class Error : public std::runtime_error {
 public:
  enum class Kind { parse, invariant, oracle_mismatch, inconclusive, verification };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline Error parse_error(const std::string& what) { return {Error::Kind::parse, what}; }
inline Error invariant_error(const std::string& what) { return {Error::Kind::invariant, what}; }

Rational make_rational(std::int64_t num, std::int64_t den);
std::string to_string(const Rational& q);
std::int64_t to_int64(const Integer& z);

// Scales a rational row to a primitive integer row (content 1, same zero pattern).
std::vector<Integer> primitive_integer_row(const std::vector<Rational>& row);

}  // namespace planeval
