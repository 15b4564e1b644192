#pragma once

#include <map>
#include <string>
#include <vector>

#include "planeval/box.hpp"
#include "planeval/model.hpp"
#include "planeval/model_io.hpp"
#include "planeval/poly.hpp"
#include "planeval/sweep.hpp"

namespace planeval {

// Coefficient ring of a series: integers, polynomials in q, or polynomials in 𝕃.
enum class Ring { integer, q, L };

std::string to_string(Ring ring);

// Box-truncated series sum a_v t^v; no zero coefficients stored.
class SparseSeries {
 public:
  SparseSeries() = default;
  SparseSeries(Box box, Ring ring) : box_(std::move(box)), ring_(ring) {}

  const Box& box() const { return box_; }
  Ring ring() const { return ring_; }
  int r() const { return box_.r(); }
  const std::map<LatticePoint, IntPoly>& terms() const { return terms_; }

  void set(const LatticePoint& v, const IntPoly& c);
  IntPoly at(const LatticePoint& v) const;
  // Integer ring only.
  std::int64_t integer_at(const LatticePoint& v) const { return at(v).coefficient(0); }
  std::vector<LatticePoint> support() const;

  // Same ring, restricted to a sub-box.
  SparseSeries restricted(const Box& sub) const;

  bool operator==(const SparseSeries& o) const = default;

 private:
  Box box_;
  Ring ring_ = Ring::integer;
  std::map<LatticePoint, IntPoly> terms_;
};

// All series of one model on one box, from a single h table on the box grown by one.
struct SeriesBundle {
  SparseSeries hilbert;      // h(v)
  SparseSeries poincare;     // sum (-1)^|I| d_I(v)
  SparseSeries generalized;  // q^{h+(v)-1} p_v(1/q)
  SparseSeries semigroup;    // p_v(𝕃)
};

SeriesBundle compute_series(const CollectionModel& model, const Box& box, Exec exec = Exec::parallel);
// The same series from a given h table covering box + 1.
SeriesBundle series_from_table(const BoxTable& h, const Box& box);

SparseSeries hilbert_series(const CollectionModel& model, const Box& box);
SparseSeries poincare_series(const CollectionModel& model, const Box& box);
SparseSeries generalized_poincare(const CollectionModel& model, const Box& box);
SparseSeries semigroup_poincare(const CollectionModel& model, const Box& box);

// (-1)^{r+1} [prod (1 - t_i) H]_{v+1} on the box shrunk by one.
SparseSeries poincare_from_hilbert(const SparseSeries& hs);
// L(v) = h(v+1) - h(v) on the box shrunk by one.
SparseSeries l_series(const SparseSeries& hs);
// Checks t^1 L = (1 - t_1...t_r) H at every w with 1 <= w <= box.
bool l_identity_holds(const SparseSeries& hs, const SparseSeries& l);

// Largest q-precision the box supports when the coordinates outside `keep` are summed:
// every omitted term has q-degree at least the number of distinct dropped coordinates
// seen in the support.
int max_projection_precision(const SparseSeries& pg, const std::vector<int>& keep);
// Sum over the dropped coordinates, modulo q^K. K = 0 picks the largest supported precision.
SparseSeries project(const SparseSeries& pg, const std::vector<int>& keep, int K);
// Evaluates every coefficient at 1.
SparseSeries specialize(const SparseSeries& s);

Json series_to_json(const SparseSeries& s);
SparseSeries series_from_json(const Json& doc);

}  // namespace planeval
