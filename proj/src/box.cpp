#include "planeval/box.hpp"

namespace planeval {

Box::Box(LatticePoint upper) : upper_(std::move(upper)) {
  size_ = upper_.empty() ? 0 : 1;
  for (int u : upper_) size_ = u < 0 ? 0 : size_ * static_cast<std::size_t>(u + 1);
}

bool Box::contains(const LatticePoint& v) const {
  if (v.size() != upper_.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || v[i] > upper_[i]) return false;
  return true;
}

std::size_t Box::index(const LatticePoint& v) const {
  if (!contains(v)) throw invariant_error("lattice point " + to_string(v) + " outside the box");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i) idx = idx * (upper_[i] + 1) + v[i];
  return idx;
}

LatticePoint Box::point(std::size_t index) const {
  LatticePoint v(upper_.size());
  for (std::size_t i = upper_.size(); i-- > 0;) {
    v[i] = static_cast<int>(index % (upper_[i] + 1));
    index /= upper_[i] + 1;
  }
  return v;
}

Box Box::shrunk(int k) const {
  LatticePoint u = upper_;
  for (auto& x : u) x -= k;
  return Box(u);
}

Box Box::grown(int k) const { return shrunk(-k); }

std::string to_string(const LatticePoint& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace planeval
