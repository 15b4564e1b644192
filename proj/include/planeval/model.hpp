#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planeval/blowup.hpp"
#include "planeval/puiseux.hpp"

namespace planeval {

using LatticePoint = std::vector<int>;

// Values (nu_1(g), ..., nu_r(g)); entries may be kInfinity.
using ValueVector = std::vector<std::int64_t>;

// Tree of infinitely near points. Vertex 0 is the origin; every other vertex is a
// point on the exceptional divisor of its parent and is proximate to its parent and
// possibly to one more ancestor (satellite point).
class ProximityTree {
 public:
  struct Vertex {
    int parent = -1;
    int depth = 0;
    int satellite_of = -1;       // second proximate ancestor, -1 for free points
    std::vector<int> children;
    std::vector<int> proximate_from;  // vertices proximate to this one
  };

  ProximityTree();

  int add_child(int parent, int satellite_of);
  int size() const { return static_cast<int>(v_.size()); }
  const Vertex& vertex(int id) const { return v_.at(id); }
  // Ancestors that `id` is proximate to (parent first).
  std::vector<int> proximate_to(int id) const;
  bool is_ancestor(int ancestor, int id) const;
  // Root-to-vertex path.
  std::vector<int> path_to(int id) const;

 private:
  std::vector<Vertex> v_;
};

// One valuation of the collection attached to the tree.
struct ValuationData {
  ValuationKind kind = ValuationKind::curve;
  std::vector<int> path;                // materialized cluster points, root first
  std::vector<std::int64_t> weights;    // cluster multiplicity at each path point
  int resolved = 0;                     // curve: index from which points are free of weight 1
  std::optional<PuiseuxDatum> source;   // present when built from Puiseux data

  std::int64_t normalization() const { return weights.front(); }
  // Divisor vertex (divisorial) or deepest materialized point (curve).
  int last() const { return path.back(); }
};

// Combinatorial model of a finite collection of rank-one plane valuations: the
// minimal joint resolution with curve tails materialized on demand.
class CollectionModel {
 public:
  CollectionModel() = default;
  CollectionModel(ProximityTree tree, std::vector<ValuationData> valuations);

  const ProximityTree& tree() const { return tree_; }
  int r() const { return static_cast<int>(vals_.size()); }
  const ValuationData& valuation(int i) const { return vals_.at(i); }
  const std::vector<ValuationData>& valuations() const { return vals_; }
  std::vector<std::int64_t> normalizations() const;

  // Path index of `vertex` in the cluster of valuation i, or -1.
  int index_on_path(int i, int vertex) const;
  // Index of the last point shared by the clusters of valuations i and j.
  int split_index(int i, int j) const;
  // Multiplicity of the cluster of valuation i at a vertex (0 off the cluster).
  std::int64_t weight(int i, int vertex) const;

  // Curve i with at least `depth` points materialized (a new model; idempotent).
  CollectionModel extend_tail(int i, int depth) const;
  // All curve tails long enough for conditions up to the given values.
  CollectionModel with_tails_for(const LatticePoint& upper) const;
  // Path index used to express nu_i >= value as a divisorial condition.
  int condition_index(int i, int value) const;

  // (nu_1(g_tau), ..., nu_r(g_tau)) for a curvette g_tau at the vertex.
  ValueVector curvette_values(int vertex) const;
  // Reverse-proximity multiplicities of a curvette at the vertex, indexed by vertex id.
  std::vector<std::int64_t> curvette_cluster(int vertex) const;

  // Curve valuations: the vertex whose divisor carries the arrow of the strict transform.
  int arrow_index(int i) const;
  // Relabeling-invariant description of the dual graph with markings.
  std::string canonical_form() const;

  // Throws Error(invariant) when the reverse proximity equalities fail.
  void check_invariants() const;

 private:
  void index_paths();

  ProximityTree tree_;
  std::vector<ValuationData> vals_;
  std::vector<std::vector<int>> path_index_;  // [valuation][vertex] -> index or -1
};

// Minimal joint resolution of the valuations described by the data.
CollectionModel build_model(const std::vector<PuiseuxDatum>& specs);

bool is_isomorphic(const CollectionModel& a, const CollectionModel& b);

// Deterministic Graphviz rendering of the finite part of the resolution.
std::string export_dot(const CollectionModel& model);

// Combinatorial description of one valuation alone, as read off its own path:
// for each path index the satellite partner index (-1 free) and the weight.
struct ValuationShape {
  ValuationKind kind = ValuationKind::curve;
  std::vector<int> satellite_of;
  std::vector<std::int64_t> weights;
  int resolved = 0;
};

ValuationShape shape_of(const CollectionModel& model, int i);

// Glues single-valuation shapes along shared initial segments. `split[i][j]` is the
// path index of the last common point of valuations i and j.
CollectionModel glue_shapes(const std::vector<ValuationShape>& shapes,
                            const std::vector<std::vector<int>>& split);

}  // namespace planeval
