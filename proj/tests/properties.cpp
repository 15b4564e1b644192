// Structural properties over the whole catalog. Runs standalone.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace planeval;
using namespace planeval::testing;

TEST_CASE("antinef closure does not depend on the processing order") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(check_confluence(e.model, e.edge, 100) == "");
  }
}

TEST_CASE("semigroup from the series support is additively closed") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(check_additive_closure(e.model, e.edge) == "");
  }
}

TEST_CASE("isomorphism test is invariant under relabeling") {
  for (std::size_t k = 0; k < catalog().size(); ++k) {
    std::vector<CollectionModel> others;
    for (std::size_t j = 0; j < catalog().size(); ++j)
      if (j != k) others.push_back(catalog()[j].model);
    CAPTURE(catalog()[k].name);
    CHECK(check_relabel_invariance(catalog()[k].model, others) == "");
  }
}

TEST_CASE("valuations are multiplicative on random germs") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    CHECK(check_multiplicativity(e.model, 100, 7) == "");
  }
}

TEST_CASE("curve equations have infinite value on their own branch") {
  // y^2 - x^3 vanishes on the cusp, y on the line y = 0
  const auto cusp = GermPolynomial::y() * GermPolynomial::y() -
                    GermPolynomial::x() * GermPolynomial::x() * GermPolynomial::x();
  const auto v = value_of(catalog_entry("triple").model, cusp);
  CHECK(v[0] == kInfinity);
  CHECK(v[1] == 3);
  CHECK(v[2] == 3);
  CHECK(value_of(catalog_entry("axes").model, GermPolynomial::y())[0] == kInfinity);
}
