#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeval/model.hpp"
#include "planeval/semigroup.hpp"
#include "planeval/series.hpp"

namespace planeval {

inline Error inconclusive_error(const std::string& what) { return {Error::Kind::inconclusive, what}; }
inline Error verification_error(const std::string& what) { return {Error::Kind::verification, what}; }

// h from P_g: lowest q-degree on the support, min over dominating support points
// elsewhere. Points with no dominating support point are left out.
SparseSeries hilbert_from_generalized(const SparseSeries& pg);

// Sub-box on which hilbert_from_generalized is trusted: every bound lowered by twice
// the largest normalization visible in the support.
Box hilbert_recovery_box(const SparseSeries& pg);

// P_g on the box shrunk by one, rebuilt from a Hilbert series.
SparseSeries generalized_from_hilbert(const SparseSeries& hs);

// Support of a series as a semigroup; throws when it is not additively closed in the box.
SemigroupBox support_semigroup(const SparseSeries& s);

// Unique model of one valuation whose Poincaré series matches `p` on its box.
CollectionModel single_valuation_topology(const SparseSeries& p);

// Glues single-valuation shapes along the given pairwise split indices.
CollectionModel assemble_dual_graph(const std::vector<ValuationShape>& shapes,
                                   const std::vector<std::vector<int>>& split);

struct ReconstructionReport {
  std::string entry;  // "generalized", "semigroup" or "hilbert"
  bool success = false;
  CollectionModel model;
  std::vector<std::string> kinds;
  std::vector<std::int64_t> normalizations;
  std::vector<std::vector<int>> generators;  // per valuation
  struct Pair {
    int i = 0, j = 0;
    std::optional<SplittingValue> criterion;  // diagonal criterion on the pair semigroup
    std::vector<int> candidates;              // split indices passing the pair test
    int split = -1;                           // index chosen by forward verification
  };
  std::vector<Pair> pairs;
  std::vector<std::string> evidence;
  std::size_t residual = 0;  // box points where the recomputed series differs
  std::optional<bool> isomorphic_to_reference;

  Json to_json() const;
};

// `qprec` overrides the q-precision of the projections (0 = largest the box supports).
ReconstructionReport reconstruct_from_generalized(const SparseSeries& pg, int qprec = 0);
ReconstructionReport reconstruct_from_semigroup_series(const SparseSeries& psg);
ReconstructionReport reconstruct_from_hilbert(const SparseSeries& hs);

struct RoundtripReport {
  ReconstructionReport from_generalized;
  ReconstructionReport from_semigroup;
  ReconstructionReport from_hilbert;
  bool all_isomorphic() const;
  Json to_json() const;
};

// Computes P_g, P̂_g and H̃ of the model on the box and reconstructs from each.
// `corrupt` perturbs the computed series before reconstruction (negative control).
RoundtripReport roundtrip(const CollectionModel& model, const Box& box, bool corrupt = false);

}  // namespace planeval
