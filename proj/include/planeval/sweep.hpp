#pragma once

#include "planeval/box.hpp"
#include "planeval/hilbert.hpp"
#include "planeval/model.hpp"

namespace planeval {

// Box sweeps come in two flavours: the serial reference loop and an OpenMP loop over
// the same per-point kernel. Both produce identical tables.
enum class Exec { serial, parallel };

// h(v) for every v in the box by the combinatorial engine.
BoxTable hilbert_table(const CollectionModel& model, const Box& box, Exec exec = Exec::parallel);

// h(v) for every v in the box by jet-space linear algebra.
BoxTable oracle_hilbert_table(const CollectionModel& model, const Box& box, Exec exec = Exec::parallel);

// Fiber data for every v of `box`, read from an h table covering box + 1.
std::vector<FiberData> fiber_table(const BoxTable& h, const Box& box);

}  // namespace planeval
