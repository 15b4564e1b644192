#include "planeval/rational.hpp"

namespace planeval {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw invariant_error("zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw invariant_error("integer overflow: " + z.get_str());
  return z.get_si();
}

std::vector<Integer> primitive_integer_row(const std::vector<Rational>& row) {
  Integer den = 1;
  for (const auto& q : row)
    if (q != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(row.size());
  Integer content = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    out[i] = row[i].get_num() * (den / row[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  return out;
}

}  // namespace planeval
