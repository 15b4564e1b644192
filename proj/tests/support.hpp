#pragma once
// Shared fixtures for the unit, property and acceptance binaries.

#include <random>
#include <string>
#include <vector>

#include "planeval/model.hpp"
#include "planeval/oracle.hpp"

namespace planeval::testing {

struct CatalogEntry {
  std::string name;
  CollectionModel model;
  int edge;  // box edge used by the heavy checks
};

// Loads data/<file>.json; the directory comes from the build.
CollectionModel load_catalog_model(const std::string& file);
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

// Same model with vertices renumbered (siblings visited in reverse) and the
// valuations listed in reverse order.
CollectionModel relabeled(const CollectionModel& m);

GermPolynomial random_germ(std::mt19937_64& rng, int max_degree);

// Each check returns an empty string on success, else a description of the first failure.
std::string check_confluence(const CollectionModel& m, int edge, int seeds);
std::string check_additive_closure(const CollectionModel& m, int edge);
// `others` are models that must not match.
std::string check_relabel_invariance(const CollectionModel& m, const std::vector<CollectionModel>& others);
std::string check_multiplicativity(const CollectionModel& m, int pairs, std::uint64_t seed);

}  // namespace planeval::testing
