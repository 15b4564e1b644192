#include "planeval/sweep.hpp"

#include <exception>

#include "planeval/jet_oracle.hpp"

namespace planeval {

namespace {

template <class Kernel>
void run(std::size_t n, Exec exec, Kernel&& kernel) {
  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < n; ++k) kernel(k);
    return;
  }
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      kernel(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(planeval_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

int max_bound(const Box& box) {
  int top = 0;
  for (int u : box.upper()) top = std::max(top, u);
  return top;
}

}  // namespace

BoxTable hilbert_table(const CollectionModel& model, const Box& box, Exec exec) {
  HilbertEngine engine(model, box.upper());
  BoxTable t{box, std::vector<std::int64_t>(box.size())};
  run(box.size(), exec, [&](std::size_t k) { t.values[k] = engine.h(box.point(k)); });
  return t;
}

BoxTable oracle_hilbert_table(const CollectionModel& model, const Box& box, Exec exec) {
  JetOracle oracle(model, max_bound(box));
  BoxTable t{box, std::vector<std::int64_t>(box.size())};
  run(box.size(), exec, [&](std::size_t k) { t.values[k] = oracle.h(box.point(k)); });
  return t;
}

std::vector<FiberData> fiber_table(const BoxTable& h, const Box& box) {
  if (!h.box.contains(box.grown(1).upper()))
    throw invariant_error("fiber_table: h table must cover the box grown by one");
  std::vector<FiberData> out(box.size());
  for (std::size_t k = 0; k < box.size(); ++k) out[k] = fiber_data_from(h, box.point(k));
  return out;
}

}  // namespace planeval
