#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace aspace {

/// An ordered pair (x, y) of distinct point indices with x <= y in the space.
/// These are the non-identity arrows of the space seen as a thin category;
/// in a non-T0 space both (x, y) and (y, x) may be present.
using Comparability = std::pair<int, int>;

/// A finite topological space in Alexandroff form: a finite preorder.
///
/// Points carry opaque string labels; their input order is the canonical
/// total order used for every deterministic tie-break downstream.
/// leq(x, y) means that x belongs to every open set containing y
/// (equivalently, x lies in the minimal open set U_y). The stored relation
/// is always reflexive and transitive; antisymmetry is not required, so
/// non-T0 preorders are legal values.
///
/// Values are immutable after construction and freely copyable.
class FiniteSpace {
public:
  /// Smallest preorder over `points` containing all of `pairs`
  /// (reflexive-transitive closure). Throws on duplicate labels, an unknown
  /// label in a pair, or an empty point list.
  static FiniteSpace from_relations(
      const std::vector<std::string>& points,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    FiniteSpace x(points);
    for (const auto& [from, to] : pairs) {
      x.rel_[x.index_of(from) * x.n_ + x.index_of(to)] = 1;
    }
    x.close_transitively();
    return x;
  }

  /// Wraps an already reflexive-transitive relation matrix (row-major,
  /// rel[i*n+j] nonzero iff point i <= point j). Throws if the matrix is not
  /// a preorder.
  static FiniteSpace from_matrix(const std::vector<std::string>& points,
                                 std::vector<unsigned char> rel) {
    FiniteSpace x(points);
    if (rel.size() != static_cast<size_t>(x.n_) * x.n_)
      throw domain_error("relation matrix has the wrong size");
    x.rel_ = std::move(rel);
    for (auto& v : x.rel_) v = v ? 1 : 0;
    for (int i = 0; i < x.n_; ++i)
      if (!x.rel_[i * x.n_ + i]) throw domain_error("relation is not reflexive");
    for (int i = 0; i < x.n_; ++i)
      for (int j = 0; j < x.n_; ++j)
        if (x.leq(i, j))
          for (int k = 0; k < x.n_; ++k)
            if (x.leq(j, k) && !x.leq(i, k))
              throw domain_error("relation is not transitive");
    return x;
  }

  int size() const { return n_; }
  const std::vector<std::string>& points() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  bool has_point(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
  }

  int index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
      throw domain_error("unknown point: " + std::string(label));
    return it->second;
  }

  bool leq(int i, int j) const {
    check_point(i);
    check_point(j);
    return rel_[i * n_ + j] != 0;
  }

  /// Two points are topologically indistinguishable iff each lies below the
  /// other.
  bool equivalent(int i, int j) const { return leq(i, j) && leq(j, i); }

  bool is_t0() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (rel_[i * n_ + j] && rel_[j * n_ + i]) return false;
    return true;
  }

  /// The minimal open set U_x: the down-set of x, sorted by point index.
  std::vector<int> minimal_open_set(int x) const {
    check_point(x);
    std::vector<int> down;
    for (int y = 0; y < n_; ++y)
      if (rel_[y * n_ + x]) down.push_back(y);
    return down;
  }

  /// Open iff a lower set.
  bool is_open(const std::vector<int>& s) const {
    auto in = member_mask(s);
    for (int x = 0; x < n_; ++x)
      if (in[x])
        for (int y = 0; y < n_; ++y)
          if (rel_[y * n_ + x] && !in[y]) return false;
    return true;
  }

  /// Closed iff an upper set.
  bool is_closed(const std::vector<int>& s) const {
    auto in = member_mask(s);
    for (int x = 0; x < n_; ++x)
      if (in[x])
        for (int y = 0; y < n_; ++y)
          if (rel_[x * n_ + y] && !in[y]) return false;
    return true;
  }

  /// All ordered pairs (x, y) with x != y and x <= y, in lexicographic
  /// index order. Reflexive pairs are excluded; for non-T0 spaces both
  /// directions of an equivalent pair appear.
  std::vector<Comparability> comparabilities() const {
    std::vector<Comparability> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && rel_[i * n_ + j]) out.emplace_back(i, j);
    return out;
  }

  /// Component id per point; components are numbered by least member, so
  /// ids follow point order. Two points share a component iff a zig-zag of
  /// comparabilities joins them.
  std::vector<int> component_ids() const {
    std::vector<int> id(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
      if (id[s] >= 0) continue;
      std::vector<int> stack{s};
      id[s] = next;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n_; ++y)
          if (id[y] < 0 && (rel_[x * n_ + y] || rel_[y * n_ + x])) {
            id[y] = next;
            stack.push_back(y);
          }
      }
      ++next;
    }
    return id;
  }

  std::vector<std::vector<int>> connected_components() const {
    auto id = component_ids();
    int k = n_ ? 1 + *std::max_element(id.begin(), id.end()) : 0;
    std::vector<std::vector<int>> comps(k);
    for (int x = 0; x < n_; ++x) comps[id[x]].push_back(x);
    return comps;
  }

  bool is_connected() const {
    auto id = component_ids();
    return std::all_of(id.begin(), id.end(), [](int c) { return c == 0; });
  }

  bool operator==(const FiniteSpace& other) const {
    return labels_ == other.labels_ && rel_ == other.rel_;
  }
  bool operator!=(const FiniteSpace& other) const { return !(*this == other); }

private:
  explicit FiniteSpace(const std::vector<std::string>& points)
      : labels_(points), n_(static_cast<int>(points.size())) {
    if (points.empty()) throw domain_error("a space needs at least one point");
    for (int i = 0; i < n_; ++i)
      if (!index_.emplace(labels_[i], i).second)
        throw domain_error("duplicate point label: " + labels_[i]);
    rel_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) rel_[i * n_ + i] = 1;
  }

  void close_transitively() {
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (rel_[i * n_ + k])
          for (int j = 0; j < n_; ++j)
            if (rel_[k * n_ + j]) rel_[i * n_ + j] = 1;
  }

  void check_point(int i) const {
    if (i < 0 || i >= n_) throw domain_error("point index out of range");
  }

  std::vector<unsigned char> member_mask(const std::vector<int>& s) const {
    std::vector<unsigned char> in(n_, 0);
    for (int x : s) {
      check_point(x);
      in[x] = 1;
    }
    return in;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  int n_ = 0;
  std::vector<unsigned char> rel_;
};

/// A total function between two spaces, stored by value.
struct PointMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<int> assignment;  // source index -> target index

  PointMap(FiniteSpace src, FiniteSpace tgt, std::vector<int> assign)
      : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)) {
    if (assignment.size() != static_cast<size_t>(source.size()))
      throw domain_error("point map must assign every source point");
    for (int v : assignment)
      if (v < 0 || v >= target.size())
        throw domain_error("point map hits an unknown target point");
  }

  int operator()(int i) const { return assignment.at(i); }
};

/// Continuity of Alexandroff maps is exactly order preservation.
inline bool is_continuous(const PointMap& f) {
  int n = f.source.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (f.source.leq(i, j) && !f.target.leq(f(i), f(j))) return false;
  return true;
}

/// T0 quotient of a space: `space` identifies each class of topologically
/// indistinguishable points, `projection` is the quotient map and `section`
/// picks the least-index representative of every class.
struct KolmogorovQuotient {
  FiniteSpace space;
  PointMap projection;
  PointMap section;
};

inline KolmogorovQuotient kolmogorov_quotient(const FiniteSpace& x) {
  int n = x.size();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(reps.size());
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && x.equivalent(i, j)) cls[j] = cls[i];
    reps.push_back(i);
  }
  int k = static_cast<int>(reps.size());
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int r : reps) labels.push_back(x.label(r));
  std::vector<unsigned char> rel(static_cast<size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      rel[a * k + b] = x.leq(reps[a], reps[b]) ? 1 : 0;
  FiniteSpace x0 = FiniteSpace::from_matrix(labels, std::move(rel));
  return KolmogorovQuotient{x0, PointMap(x, x0, cls), PointMap(x0, x, reps)};
}

/// A non-empty subset of a space's points with the induced order.
class SubSpace {
public:
  SubSpace(FiniteSpace parent, std::vector<int> carrier)
      : parent_(std::move(parent)), carrier_(std::move(carrier)) {
    std::sort(carrier_.begin(), carrier_.end());
    carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
    if (carrier_.empty()) throw domain_error("subspace carrier must be non-empty");
    for (int p : carrier_)
      if (p < 0 || p >= parent_.size())
        throw domain_error("subspace carrier names an unknown point");
  }

  static SubSpace of_labels(const FiniteSpace& parent,
                            const std::vector<std::string>& labels) {
    std::vector<int> carrier;
    carrier.reserve(labels.size());
    for (const auto& l : labels) carrier.push_back(parent.index_of(l));
    return SubSpace(parent, std::move(carrier));
  }

  const FiniteSpace& parent() const { return parent_; }
  const std::vector<int>& carrier() const { return carrier_; }  // sorted

  bool contains(int parent_point) const {
    return std::binary_search(carrier_.begin(), carrier_.end(), parent_point);
  }

  int to_parent(int sub_index) const { return carrier_.at(sub_index); }

  std::optional<int> from_parent(int parent_point) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), parent_point);
    if (it == carrier_.end() || *it != parent_point) return std::nullopt;
    return static_cast<int>(it - carrier_.begin());
  }

  /// The carrier with the restricted order, keeping the parent labels.
  FiniteSpace induced() const {
    int m = static_cast<int>(carrier_.size());
    std::vector<std::string> labels;
    labels.reserve(m);
    for (int p : carrier_) labels.push_back(parent_.label(p));
    std::vector<unsigned char> rel(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        rel[a * m + b] = parent_.leq(carrier_[a], carrier_[b]) ? 1 : 0;
    return FiniteSpace::from_matrix(labels, std::move(rel));
  }

private:
  FiniteSpace parent_;
  std::vector<int> carrier_;
};

/// Covering relations (Hasse edges) of a T0 space: x < y with nothing
/// strictly between. Throws on non-T0 input; quotient first.
inline std::vector<Comparability> cover_relations(const FiniteSpace& x) {
  if (!x.is_t0())
    throw domain_error("cover relations need a T0 space; take the Kolmogorov quotient first");
  std::vector<Comparability> covers;
  int n = x.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !x.leq(i, j)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != i && z != j && x.leq(i, z) && x.leq(z, j)) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return covers;
}

}  // namespace aspace
