#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "space.hpp"

namespace aspace {

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  /// false when x and y were already joined
  bool unite(int x, int y) {
    int a = find(x), b = find(y);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

/// One traversal step along an arrow of the space: forward rides the
/// comparability (x, y) from x to y, inverse rides it backwards.
struct Step {
  Comparability relation;
  bool inverse = false;

  int source() const { return inverse ? relation.second : relation.first; }
  int target() const { return inverse ? relation.first : relation.second; }
  bool operator==(const Step&) const = default;
};

inline Step forward_step(int x, int y) { return Step{{x, y}, false}; }
inline Step inverse_step(int x, int y) { return Step{{x, y}, true}; }

/// A composable (possibly empty) sequence of steps with a fixed start point.
struct PathWord {
  int start = 0;
  std::vector<Step> steps;
};

/// Checks that every step rides a comparability of `x` and that consecutive
/// steps compose; returns the end point of the walk.
inline int validate_path(const FiniteSpace& x, const PathWord& w) {
  if (w.start < 0 || w.start >= x.size())
    throw domain_error("path starts at an unknown point");
  int at = w.start;
  for (const auto& s : w.steps) {
    auto [a, b] = s.relation;
    if (a < 0 || b < 0 || a >= x.size() || b >= x.size() || a == b || !x.leq(a, b))
      throw domain_error("path step is not a comparability of the space");
    if (s.source() != at) throw domain_error("path steps do not compose");
    at = s.target();
  }
  return at;
}

/// A generating edge set whose undirected graph is, on every connected
/// component of the space, an acyclic spanning tree. Edges are arbitrary
/// comparabilities, not only covering relations. At most one direction of
/// an equivalent pair can appear (the reverse would close a cycle).
class SpanningTree {
public:
  SpanningTree(FiniteSpace space, std::vector<Comparability> edges)
      : space_(std::move(space)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    detail::UnionFind uf(space_.size());
    for (auto [a, b] : edges_) {
      if (a < 0 || b < 0 || a >= space_.size() || b >= space_.size() || a == b ||
          !space_.leq(a, b))
        throw domain_error("tree edge is not a comparability of the space");
      if (!uf.unite(a, b)) throw domain_error("tree edges contain a cycle");
    }
    for (const auto& comp : space_.connected_components())
      for (int p : comp)
        if (uf.find(p) != uf.find(comp.front()))
          throw domain_error("tree does not span a component of the space");
    adj_.assign(space_.size(), {});
    for (const auto& e : edges_) {
      adj_[e.first].push_back({e.second, e});
      adj_[e.second].push_back({e.first, e});
    }
  }

  const FiniteSpace& space() const { return space_; }
  const std::vector<Comparability>& edges() const { return edges_; }

  bool contains(const Comparability& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// The unique simple path between two points of the same component,
  /// expressed with forward/inverse steps; empty when from == to.
  PathWord path(int from, int to) const {
    if (from < 0 || to < 0 || from >= space_.size() || to >= space_.size())
      throw domain_error("unknown point");
    std::vector<int> prev(space_.size(), -1);
    std::vector<Step> how(space_.size());
    std::vector<int> queue{from};
    prev[from] = from;
    for (size_t head = 0; head < queue.size(); ++head) {
      int at = queue[head];
      for (const auto& [next, edge] : adj_[at]) {
        if (prev[next] >= 0) continue;
        prev[next] = at;
        how[next] = at == edge.first ? Step{edge, false} : Step{edge, true};
        queue.push_back(next);
      }
    }
    if (prev[to] < 0)
      throw domain_error("points lie in different components of the tree");
    std::vector<Step> back;
    for (int at = to; at != from; at = prev[at]) back.push_back(how[at]);
    std::reverse(back.begin(), back.end());
    return PathWord{from, std::move(back)};
  }

  bool operator==(const SpanningTree& o) const {
    return space_ == o.space_ && edges_ == o.edges_;
  }

private:
  FiniteSpace space_;
  std::vector<Comparability> edges_;
  std::vector<std::vector<std::pair<int, Comparability>>> adj_;
};

/// Grows a forest to a maximal tree: scan comparabilities in canonical
/// order, keeping each edge that joins two distinct partial components.
/// This is the constructive finite replacement for the usual maximality
/// argument; the result is deterministic and contains every forest edge.
inline SpanningTree extend_forest_to_tree(const FiniteSpace& space,
                                          const std::vector<Comparability>& forest) {
  detail::UnionFind uf(space.size());
  std::vector<Comparability> edges = forest;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= space.size() || b >= space.size() || a == b ||
        !space.leq(a, b))
      throw domain_error("forest edge is not a comparability of the space");
    if (!uf.unite(a, b)) throw domain_error("forest contains a cycle");
  }
  for (const auto& e : space.comparabilities())
    if (uf.unite(e.first, e.second)) edges.push_back(e);
  return SpanningTree(space, std::move(edges));
}

/// The canonical generator list attached to a tree: all comparabilities of
/// the space that are not tree edges, in canonical order.
inline std::vector<Comparability> non_tree_generators(const SpanningTree& t) {
  std::vector<Comparability> gens;
  for (const auto& e : t.space().comparabilities())
    if (!t.contains(e)) gens.push_back(e);
  return gens;
}

/// One letter of a word over the non-tree generators.
struct GenLetter {
  int gen = 0;
  bool inverse = false;
  auto operator<=>(const GenLetter&) const = default;
};

using GenWord = std::vector<GenLetter>;

/// Cancels adjacent inverse pairs until none remain.
inline GenWord free_reduce(const GenWord& w) {
  GenWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline GenWord invert_word(const GenWord& w) {
  GenWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

/// A finite presentation of the fundamental group of `space` at `basepoint`:
/// generators are the comparabilities outside the maximal tree, relators
/// come from the composition relations of the localized thin category.
struct Presentation {
  FiniteSpace space;
  SpanningTree tree;
  int basepoint = 0;
  std::vector<Comparability> generators;
  std::vector<GenWord> relators;

  std::optional<int> generator_index(const Comparability& e) const {
    auto it = std::lower_bound(generators.begin(), generators.end(), e);
    if (it == generators.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - generators.begin());
  }

  std::string generator_name(int g) const {
    const auto& e = generators.at(g);
    return "g[" + space.label(e.first) + "<" + space.label(e.second) + "]";
  }

  std::string word_to_string(const GenWord& w) const {
    std::string out;
    for (const auto& l : w) {
      if (!out.empty()) out += " ";
      out += generator_name(l.gen);
      if (l.inverse) out += "^-1";
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "<";
    for (size_t i = 0; i < generators.size(); ++i) {
      if (i) out += ", ";
      out += generator_name(static_cast<int>(i));
    }
    out += " | ";
    for (size_t i = 0; i < relators.size(); ++i) {
      if (i) out += ", ";
      out += word_to_string(relators[i]);
    }
    out += ">";
    return out;
  }
};

/// Presentation of the fundamental group from a maximal tree. Generators
/// are the non-tree comparabilities; every composable pair of arrows
/// x <= y <= z contributes the relator g(x<=z)^-1 g(y<=z) g(x<=y), with
/// tree edges and reflexive composites contributing nothing. Relators that
/// reduce to the empty word are dropped, duplicates kept once; a reduced
/// relator led by an inverse letter is replaced by its inverse.
inline Presentation pi1_presentation(const FiniteSpace& space, int basepoint,
                                     const SpanningTree& tree) {
  if (tree.space() != space)
    throw domain_error("tree was built over a different space");
  if (!space.is_connected())
    throw domain_error(
        "fundamental group needs a connected space; restrict to a component");
  if (basepoint < 0 || basepoint >= space.size())
    throw domain_error("unknown basepoint");

  Presentation p{space, tree, basepoint, non_tree_generators(tree), {}};

  auto letter = [&](int x, int y) -> std::optional<GenLetter> {
    auto g = p.generator_index({x, y});
    if (!g) return std::nullopt;  // tree edge
    return GenLetter{*g, false};
  };

  std::set<GenWord> seen;
  int n = space.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x || !space.leq(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == y || !space.leq(y, z)) continue;
        GenWord w;
        if (x != z) {  // reflexive composites contribute the empty word
          if (auto l = letter(x, z)) w.push_back({l->gen, true});
        }
        if (auto l = letter(y, z)) w.push_back(*l);
        if (auto l = letter(x, y)) w.push_back(*l);
        w = free_reduce(w);
        if (w.empty()) continue;
        if (w.front().inverse) w = invert_word(w);
        if (seen.insert(w).second) p.relators.push_back(w);
      }
    }
  return p;
}

/// Collapses a path to a word over the non-tree generators: tree steps are
/// dropped and adjacent inverse pairs cancelled. Letters are emitted in
/// composition order (last step first), so concatenating paths multiplies
/// the resulting words. No relation beyond free reduction is applied.
inline GenWord reduce_word(const SpanningTree& tree, const PathWord& w) {
  validate_path(tree.space(), w);
  auto gens = non_tree_generators(tree);
  auto index_of = [&](const Comparability& e) {
    return static_cast<int>(std::lower_bound(gens.begin(), gens.end(), e) - gens.begin());
  };
  GenWord out;
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (tree.contains(it->relation)) continue;
    out.push_back({index_of(it->relation), it->inverse});
  }
  return free_reduce(out);
}

/// Conjugates a loop at `a` into a loop at `x0` along the unique tree path,
/// realizing the canonical change-of-basepoint isomorphism at word level.
inline PathWord basepoint_transport(const SpanningTree& tree, int a, int x0,
                                    const PathWord& w) {
  if (w.start != a || validate_path(tree.space(), w) != a)
    throw domain_error("transport needs a loop at the given point");
  PathWord to_a = tree.path(x0, a);
  PathWord back = tree.path(a, x0);
  PathWord out{x0, {}};
  out.steps.reserve(to_a.steps.size() + w.steps.size() + back.steps.size());
  out.steps.insert(out.steps.end(), to_a.steps.begin(), to_a.steps.end());
  out.steps.insert(out.steps.end(), w.steps.begin(), w.steps.end());
  out.steps.insert(out.steps.end(), back.steps.begin(), back.steps.end());
  return out;
}

/// The loop at `basepoint` that represents a comparability in the
/// fundamental group: tree path to its source, the arrow itself, tree path
/// back from its target.
inline PathWord generator_loop(const SpanningTree& tree, int basepoint,
                               const Comparability& e) {
  if (!tree.space().leq(e.first, e.second) || e.first == e.second)
    throw domain_error("not a comparability of the space");
  PathWord out = tree.path(basepoint, e.first);
  out.steps.push_back(Step{e, false});
  PathWord back = tree.path(e.second, basepoint);
  out.steps.insert(out.steps.end(), back.steps.begin(), back.steps.end());
  return out;
}

/// Abelianization of a presentation from its relator exponent matrix.
inline HomologyGroup abelianization(int num_generators,
                                    const std::vector<GenWord>& relators) {
  IntMatrix m(num_generators, std::vector<long long>(relators.size(), 0));
  for (size_t j = 0; j < relators.size(); ++j)
    for (const auto& l : relators[j]) m[l.gen][j] += l.inverse ? -1 : 1;
  auto snf = smith_normal_form(m);
  HomologyGroup h;
  h.betti = num_generators - snf.rank;
  for (const auto& f : snf.invariant_factors)
    if (f > BigInt(1)) h.torsion.push_back(f);
  return h;
}

inline HomologyGroup abelianization(const Presentation& p) {
  return abelianization(static_cast<int>(p.generators.size()), p.relators);
}

}  // namespace aspace
