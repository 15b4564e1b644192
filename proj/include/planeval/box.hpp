#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planeval/model.hpp"

namespace planeval {

// The lattice box {v : 0 <= v_i <= upper_i}, enumerated in lexicographic order.
class Box {
 public:
  Box() = default;
  explicit Box(LatticePoint upper);
  // Every coordinate bounded by `edge`.
  static Box cube(int r, int edge) { return Box(LatticePoint(r, edge)); }

  int r() const { return static_cast<int>(upper_.size()); }
  const LatticePoint& upper() const { return upper_; }
  std::size_t size() const { return size_; }
  bool contains(const LatticePoint& v) const;
  std::size_t index(const LatticePoint& v) const;
  LatticePoint point(std::size_t index) const;
  // The box with every bound lowered by `k` (empty when some bound becomes negative).
  Box shrunk(int k) const;
  Box grown(int k) const;
  bool empty() const { return size_ == 0; }

  bool operator==(const Box&) const = default;

 private:
  LatticePoint upper_;
  std::size_t size_ = 0;
};

// One integer per box point.
struct BoxTable {
  Box box;
  std::vector<std::int64_t> values;

  std::int64_t at(const LatticePoint& v) const { return values.at(box.index(v)); }
};

std::string to_string(const LatticePoint& v);

}  // namespace planeval
