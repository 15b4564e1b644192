#include "planeval/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace planeval {

// ---------------------------------------------------------------------------
// ProximityTree

ProximityTree::ProximityTree() { v_.push_back(Vertex{}); }

int ProximityTree::add_child(int parent, int satellite_of) {
  if (parent < 0 || parent >= size()) throw invariant_error("unknown parent vertex");
  if (satellite_of >= 0) {
    if (satellite_of == parent || !is_ancestor(satellite_of, parent))
      throw invariant_error("satellite partner must be a strict ancestor of the parent");
    auto prox = proximate_to(parent);
    if (std::find(prox.begin(), prox.end(), satellite_of) == prox.end() &&
        v_[parent].parent != satellite_of)
      throw invariant_error("parent of a satellite point must be proximate to its partner");
    for (int c : v_[parent].children)
      if (v_[c].satellite_of == satellite_of)
        throw invariant_error("two distinct satellite points proximate to the same pair");
  }
  Vertex child;
  child.parent = parent;
  child.depth = v_[parent].depth + 1;
  child.satellite_of = satellite_of;
  const int id = size();
  v_.push_back(std::move(child));
  v_[parent].children.push_back(id);
  v_[parent].proximate_from.push_back(id);
  if (satellite_of >= 0) v_[satellite_of].proximate_from.push_back(id);
  return id;
}

std::vector<int> ProximityTree::proximate_to(int id) const {
  std::vector<int> out;
  const auto& v = v_.at(id);
  if (v.parent >= 0) out.push_back(v.parent);
  if (v.satellite_of >= 0) out.push_back(v.satellite_of);
  return out;
}

bool ProximityTree::is_ancestor(int ancestor, int id) const {
  while (id >= 0) {
    if (id == ancestor) return true;
    id = v_.at(id).parent;
  }
  return false;
}

std::vector<int> ProximityTree::path_to(int id) const {
  std::vector<int> out;
  for (int x = id; x >= 0; x = v_.at(x).parent) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// CollectionModel

CollectionModel::CollectionModel(ProximityTree tree, std::vector<ValuationData> valuations)
    : tree_(std::move(tree)), vals_(std::move(valuations)) {
  index_paths();
}

void CollectionModel::index_paths() {
  path_index_.assign(vals_.size(), std::vector<int>(tree_.size(), -1));
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    const auto& p = vals_[i].path;
    if (p.empty() || p.front() != 0) throw invariant_error("valuation path must start at the root");
    if (p.size() != vals_[i].weights.size()) throw invariant_error("path/weight length mismatch");
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0 && tree_.vertex(p[k]).parent != p[k - 1])
        throw invariant_error("valuation path is not a chain in the tree");
      path_index_[i][p[k]] = static_cast<int>(k);
    }
  }
}

std::vector<std::int64_t> CollectionModel::normalizations() const {
  std::vector<std::int64_t> out;
  for (const auto& v : vals_) out.push_back(v.normalization());
  return out;
}

int CollectionModel::index_on_path(int i, int vertex) const {
  const auto& idx = path_index_.at(i);
  return vertex >= 0 && vertex < static_cast<int>(idx.size()) ? idx[vertex] : -1;
}

std::int64_t CollectionModel::weight(int i, int vertex) const {
  int k = index_on_path(i, vertex);
  return k < 0 ? 0 : vals_[i].weights[k];
}

int CollectionModel::split_index(int i, int j) const {
  const auto& a = vals_.at(i).path;
  const auto& b = vals_.at(j).path;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return static_cast<int>(k) - 1;
}

namespace {

int last_satellite_index(const CollectionModel& m, int i) {
  const auto& p = m.valuation(i).path;
  int last = 0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (m.tree().vertex(p[k]).satellite_of >= 0) last = static_cast<int>(k);
  return last;
}

// Appends free tail points to curve i until its path has `length` points.
void grow_curve(ProximityTree& tree, ValuationData& v, std::size_t length) {
  while (v.path.size() < length) {
    int id = tree.add_child(v.path.back(), -1);
    v.path.push_back(id);
    v.weights.push_back(1);
  }
}

}  // namespace

CollectionModel CollectionModel::extend_tail(int i, int depth) const {
  if (vals_.at(i).kind != ValuationKind::curve)
    throw invariant_error("extend_tail: valuation " + std::to_string(i) + " is divisorial");
  if (depth <= 0) throw invariant_error("extend_tail: depth must be positive");
  const std::size_t want = static_cast<std::size_t>(last_satellite_index(*this, i) + 1 + depth);
  if (vals_[i].path.size() >= want) return *this;
  ProximityTree tree = tree_;
  auto vals = vals_;
  grow_curve(tree, vals[i], want);
  return {std::move(tree), std::move(vals)};
}

int CollectionModel::condition_index(int i, int value) const {
  const auto& v = vals_.at(i);
  if (v.kind == ValuationKind::divisorial) return static_cast<int>(v.path.size()) - 1;
  // A germ through the first `value` points of the branch already meets it with
  // multiplicity >= value; beyond the resolution the curvette and the branch agree.
  return std::max(value - 1, v.resolved);
}

CollectionModel CollectionModel::with_tails_for(const LatticePoint& upper) const {
  if (static_cast<int>(upper.size()) != r()) throw invariant_error("box dimension mismatch");
  ProximityTree tree = tree_;
  auto vals = vals_;
  bool changed = false;
  for (int i = 0; i < r(); ++i) {
    if (vals[i].kind != ValuationKind::curve) continue;
    std::size_t want = static_cast<std::size_t>(
        std::max(condition_index(i, upper[i]) + 2, upper[i] + 1));
    if (vals[i].path.size() < want) {
      grow_curve(tree, vals[i], want);
      changed = true;
    }
  }
  if (!changed) return *this;
  return {std::move(tree), std::move(vals)};
}

std::vector<std::int64_t> CollectionModel::curvette_cluster(int vertex) const {
  if (vertex < 0 || vertex >= tree_.size()) throw invariant_error("unknown vertex");
  std::vector<std::int64_t> m(tree_.size(), 0);
  auto path = tree_.path_to(vertex);
  m[vertex] = 1;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    for (int rho : tree_.proximate_to(*it)) m[rho] += m[*it];
  return m;
}

ValueVector CollectionModel::curvette_values(int vertex) const {
  auto m = curvette_cluster(vertex);
  ValueVector out(r(), 0);
  for (int rho : tree_.path_to(vertex))
    for (int i = 0; i < r(); ++i) out[i] += weight(i, rho) * m[rho];
  return out;
}

int CollectionModel::arrow_index(int i) const {
  const auto& v = vals_.at(i);
  if (v.kind != ValuationKind::curve) throw invariant_error("arrow_index of a divisorial valuation");
  int a = std::max(v.resolved - 1, 0);
  for (int j = 0; j < r(); ++j)
    if (j != i) a = std::max(a, split_index(i, j));
  return a;
}

std::string CollectionModel::canonical_form() const {
  std::vector<char> included(tree_.size(), 0);
  std::vector<int> arrows(tree_.size(), 0), divisors(tree_.size(), 0);
  for (int i = 0; i < r(); ++i) {
    const auto& v = vals_[i];
    int end = v.kind == ValuationKind::curve ? arrow_index(i) : static_cast<int>(v.path.size()) - 1;
    if (end >= static_cast<int>(v.path.size())) throw invariant_error("curve tail not materialized");
    for (int k = 0; k <= end; ++k) included[v.path[k]] = 1;
    (v.kind == ValuationKind::curve ? arrows : divisors)[v.path[end]] += 1;
  }
  std::function<std::string(int)> rec = [&](int id) {
    const auto& vx = tree_.vertex(id);
    std::ostringstream s;
    s << '(';
    if (vx.satellite_of >= 0) s << 's' << vx.depth - tree_.vertex(vx.satellite_of).depth;
    if (arrows[id]) s << 'A' << arrows[id];
    if (divisors[id]) s << 'D' << divisors[id];
    std::vector<std::string> kids;
    for (int c : vx.children)
      if (included[c]) kids.push_back(rec(c));
    std::sort(kids.begin(), kids.end());
    for (const auto& k : kids) s << k;
    s << ')';
    return s.str();
  };
  return rec(0);
}

void CollectionModel::check_invariants() const {
  for (int id = 1; id < tree_.size(); ++id) {
    const auto& vx = tree_.vertex(id);
    if (vx.satellite_of < 0) continue;
    auto prox = tree_.proximate_to(vx.parent);
    if (std::find(prox.begin(), prox.end(), vx.satellite_of) == prox.end())
      throw invariant_error("satellite vertex whose parent is not proximate to its partner");
  }
  for (int i = 0; i < r(); ++i) {
    const auto& v = vals_[i];
    const int len = static_cast<int>(v.path.size());
    for (int k = 0; k < len; ++k) {
      if (v.weights[k] <= 0) throw invariant_error("cluster weights must be positive");
      const bool deepest = k == len - 1;
      std::int64_t sum = 0;
      for (int q = k + 1; q < len; ++q) {
        auto prox = tree_.proximate_to(v.path[q]);
        if (std::find(prox.begin(), prox.end(), v.path[k]) != prox.end()) sum += v.weights[q];
      }
      if (deepest) {
        if (v.kind == ValuationKind::curve) sum += 1;  // first unmaterialized tail point
        else continue;
      }
      if (sum != v.weights[k])
        throw invariant_error("reverse proximity equality fails for valuation " + std::to_string(i) +
                              " at path index " + std::to_string(k));
    }
    if (v.kind == ValuationKind::curve) {
      if (v.resolved < 0 || v.resolved >= len) throw invariant_error("curve tail start not materialized");
      for (int k = v.resolved + 1; k < len; ++k)
        if (tree_.vertex(v.path[k]).satellite_of >= 0 || v.weights[k] != 1)
          throw invariant_error("curve tail must consist of free points of weight 1");
    }
  }
}

// ---------------------------------------------------------------------------
// Construction from Puiseux data

namespace {

BranchPath divisorial_path(const PuiseuxDatum& d) {
  const auto a = branch_polynomials(d, Rational(1));
  const auto b = branch_polynomials(d, Rational(2));
  for (int depth = 8; depth <= 4096; depth *= 2) {
    auto pa = simulate_branch(a, depth);
    auto pb = simulate_branch(b, depth);
    int common = common_prefix(pa, pb);
    if (common < depth) {
      pa.points.resize(common);
      pa.resolved = -1;
      return pa;
    }
  }
  throw invariant_error("curvette family does not separate; malformed divisorial datum");
}

}  // namespace

CollectionModel build_model(const std::vector<PuiseuxDatum>& specs) {
  if (specs.empty()) throw invariant_error("build_model: no valuations given");
  for (std::size_t i = 0; i < specs.size(); ++i) {
    specs[i].validate();
    for (std::size_t j = 0; j < i; ++j)
      if (specs[i] == specs[j])
        throw invariant_error("duplicate valuation at positions " + std::to_string(j) + " and " +
                              std::to_string(i));
  }
  const std::size_t r = specs.size();
  std::vector<BranchPath> paths(r);
  std::vector<int> depth(r, 8);
  std::vector<BranchPolynomials> branches(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (specs[i].kind == ValuationKind::divisorial) paths[i] = divisorial_path(specs[i]);
    else branches[i] = branch_polynomials(specs[i]);
  }
  constexpr int kMaxDepth = 1024;
  for (;;) {
    for (std::size_t i = 0; i < r; ++i)
      if (specs[i].kind == ValuationKind::curve &&
          static_cast<int>(paths[i].points.size()) != depth[i])
        paths[i] = simulate_branch(branches[i], depth[i]);
    std::vector<char> grow(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (specs[i].kind != ValuationKind::curve) continue;
      if (paths[i].resolved < 0 || paths[i].resolved + 2 > depth[i]) grow[i] = 1;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        const int common = common_prefix(paths[i], paths[j]);
        const int li = static_cast<int>(paths[i].points.size());
        const int lj = static_cast<int>(paths[j].points.size());
        if (specs[j].kind == ValuationKind::curve) {
          if (common >= std::min(li, lj)) grow[i] = grow[j] = 1;
        } else if (common >= li) {
          grow[i] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < r; ++i)
      if (specs[i].kind == ValuationKind::divisorial)
        for (std::size_t j = 0; j < i; ++j)
          if (specs[j].kind == ValuationKind::divisorial && paths[i].points.size() == paths[j].points.size() &&
              common_prefix(paths[i], paths[j]) == static_cast<int>(paths[i].points.size()))
            throw invariant_error("duplicate valuation: data " + std::to_string(j) + " and " +
                                  std::to_string(i) + " define the same divisor");
    if (std::none_of(grow.begin(), grow.end(), [](char g) { return g != 0; })) break;
    for (std::size_t i = 0; i < r; ++i) {
      if (!grow[i]) continue;
      depth[i] *= 2;
      if (depth[i] > kMaxDepth)
        throw invariant_error("duplicate valuation: branch " + std::to_string(i) +
                              " cannot be separated from the others");
    }
  }

  ProximityTree tree;
  std::map<std::pair<int, std::string>, int> children;
  std::vector<ValuationData> vals(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto& v = vals[i];
    v.kind = specs[i].kind;
    v.source = specs[i];
    v.resolved = std::max(paths[i].resolved, 0);
    const auto& pts = paths[i].points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      int id = 0;
      if (k > 0) {
        auto key = std::make_pair(v.path.back(), pts[k].key.str());
        auto it = children.find(key);
        if (it != children.end()) {
          id = it->second;
        } else {
          int sat = pts[k].satellite_of >= 0 ? v.path[pts[k].satellite_of] : -1;
          id = tree.add_child(v.path.back(), sat);
          children.emplace(key, id);
        }
      }
      v.path.push_back(id);
      v.weights.push_back(pts[k].multiplicity);
    }
  }
  CollectionModel model(std::move(tree), std::move(vals));
  model.check_invariants();
  return model;
}

bool is_isomorphic(const CollectionModel& a, const CollectionModel& b) {
  return a.canonical_form() == b.canonical_form();
}

std::string export_dot(const CollectionModel& model) {
  std::vector<char> included(model.tree().size(), 0);
  std::vector<std::string> marks(model.tree().size());
  for (int i = 0; i < model.r(); ++i) {
    const auto& v = model.valuation(i);
    int end = v.kind == ValuationKind::curve ? model.arrow_index(i) : static_cast<int>(v.path.size()) - 1;
    for (int k = 0; k <= end; ++k) included[v.path[k]] = 1;
    marks[v.path[end]] += (v.kind == ValuationKind::curve ? " ->" : " D") + std::to_string(i + 1);
  }
  std::ostringstream s;
  s << "digraph resolution {\n  node [shape=circle];\n";
  const auto& t = model.tree();
  for (int id = 0; id < t.size(); ++id) {
    if (!included[id]) continue;
    s << "  v" << id << " [label=\"" << id << marks[id] << "\"];\n";
  }
  for (int id = 1; id < t.size(); ++id) {
    if (!included[id]) continue;
    s << "  v" << t.vertex(id).parent << " -> v" << id << ";\n";
    if (t.vertex(id).satellite_of >= 0)
      s << "  v" << id << " -> v" << t.vertex(id).satellite_of << " [style=dashed, arrowhead=none];\n";
  }
  for (int i = 0; i < model.r(); ++i) {
    const auto& v = model.valuation(i);
    if (v.kind != ValuationKind::curve) continue;
    int end = model.arrow_index(i);
    s << "  c" << i + 1 << " [shape=point];\n";
    s << "  v" << v.path[end] << " -> c" << i + 1 << " [arrowhead=normal, label=\"nu" << i + 1 << "\"];\n";
  }
  s << "}\n";
  return s.str();
}

// ---------------------------------------------------------------------------
// Shapes and gluing

ValuationShape shape_of(const CollectionModel& model, int i) {
  const auto& v = model.valuation(i);
  ValuationShape s;
  s.kind = v.kind;
  s.weights = v.weights;
  s.resolved = v.resolved;
  for (int id : v.path) {
    int sat = model.tree().vertex(id).satellite_of;
    s.satellite_of.push_back(sat >= 0 ? model.index_on_path(i, sat) : -1);
  }
  return s;
}

namespace {

void extend_shape(ValuationShape& s, std::size_t length) {
  if (s.kind != ValuationKind::curve && s.weights.size() < length)
    throw invariant_error("split point lies beyond the divisor of a divisorial valuation");
  while (s.weights.size() < length) {
    s.weights.push_back(1);
    s.satellite_of.push_back(-1);
  }
}

}  // namespace

CollectionModel glue_shapes(const std::vector<ValuationShape>& input,
                            const std::vector<std::vector<int>>& split) {
  const int r = static_cast<int>(input.size());
  if (r == 0) throw invariant_error("glue_shapes: no valuations");
  auto shapes = input;
  for (int i = 0; i < r; ++i) {
    std::size_t need = shapes[i].kind == ValuationKind::curve
                           ? static_cast<std::size_t>(shapes[i].resolved + 2)
                           : shapes[i].weights.size();
    for (int j = 0; j < r; ++j)
      if (j != i) {
        if (split.at(i).at(j) != split.at(j).at(i) || split[i][j] < 0)
          throw invariant_error("split table must be symmetric and nonnegative");
        std::size_t s = static_cast<std::size_t>(split[i][j]) + 1;
        if (shapes[i].kind == ValuationKind::curve) s += 1;  // one exclusive point past the split
        need = std::max(need, s);
      }
    extend_shape(shapes[i], need);
  }
  ProximityTree tree;
  std::vector<ValuationData> vals(r);
  for (int j = 0; j < r; ++j) {
    int host = -1, shared = 0;
    for (int i = 0; i < j; ++i)
      if (host < 0 || split[i][j] > shared) {
        host = i;
        shared = split[i][j];
      }
    auto& v = vals[j];
    v.kind = shapes[j].kind;
    v.resolved = shapes[j].resolved;
    v.weights = shapes[j].weights;
    const std::size_t len = shapes[j].weights.size();
    for (std::size_t k = 0; k < len; ++k) {
      if (k == 0) {
        v.path.push_back(0);
        continue;
      }
      if (host >= 0 && static_cast<int>(k) <= shared) {
        if (shapes[host].satellite_of[k] != shapes[j].satellite_of[k])
          throw invariant_error("valuations " + std::to_string(host) + " and " + std::to_string(j) +
                                " cannot share the prescribed initial points");
        v.path.push_back(vals[host].path[k]);
        continue;
      }
      int sat = shapes[j].satellite_of[k];
      v.path.push_back(tree.add_child(v.path.back(), sat >= 0 ? v.path[sat] : -1));
    }
  }
  CollectionModel model(std::move(tree), std::move(vals));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (model.split_index(i, j) != split[i][j])
        throw invariant_error("splitting data not realizable by a tree (triple inconsistency at " +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  model.check_invariants();
  return model;
}

}  // namespace planeval
