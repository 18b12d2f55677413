#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "groupoid.hpp"
#include "space.hpp"

namespace aspace {

/// A functor from a space into a finite group: one group element per
/// comparability, identity on reflexive arrows, compatible with
/// composition: value(x<=z) == value(y<=z) * value(x<=y) whenever
/// x <= y <= z. Functoriality is checked on every composable triple at
/// construction.
class GroupFunctor {
public:
  /// `values` is aligned with space.comparabilities().
  GroupFunctor(FiniteSpace space, FiniteGroup group, const std::vector<int>& values)
      : space_(std::move(space)), group_(std::move(group)) {
    auto comps = space_.comparabilities();
    if (values.size() != comps.size())
      throw domain_error("functor must assign a value to every comparability");
    int n = space_.size();
    val_.assign(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) val_[i * n + i] = group_.identity();
    for (size_t k = 0; k < comps.size(); ++k) {
      if (values[k] < 0 || values[k] >= group_.size())
        throw domain_error("functor value is not a group element");
      val_[comps[k].first * n + comps[k].second] = values[k];
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!space_.leq(x, y)) continue;
        for (int z = 0; z < n; ++z) {
          if (!space_.leq(y, z)) continue;
          if (value(x, z) != group_.mul(value(y, z), value(x, y)))
            throw domain_error("not a functor: composition fails at " +
                               space_.label(x) + " <= " + space_.label(y) +
                               " <= " + space_.label(z));
        }
      }
  }

  const FiniteSpace& space() const { return space_; }
  const FiniteGroup& group() const { return group_; }

  /// Requires x <= y; reflexive arrows carry the identity.
  int value(int x, int y) const {
    int v = val_.at(static_cast<size_t>(x) * space_.size() + y);
    if (v < 0) throw domain_error("functor value requested for a non-relation");
    return v;
  }

private:
  FiniteSpace space_;
  FiniteGroup group_;
  std::vector<int> val_;
};

/// The functor attached to an arbitrary maximal tree and a hom out of a
/// presented fundamental group: each comparability maps to the image of its
/// loop class at the presentation's basepoint. With the presentation's own
/// tree this sends tree edges to the identity and each generator to its
/// assigned image.
inline GroupFunctor functor_via_tree(const SpanningTree& tree, const GroupHom& h) {
  if (tree.space() != h.domain().space)
    throw domain_error("tree was built over a different space");
  int x0 = h.domain().basepoint;
  std::vector<int> values;
  for (const auto& e : tree.space().comparabilities()) {
    PathWord loop = generator_loop(tree, x0, e);
    values.push_back(h.evaluate(reduce_word(h.domain().tree, loop)));
  }
  try {
    return GroupFunctor(tree.space(), h.codomain(), values);
  } catch (const domain_error& e) {
    throw std::logic_error(std::string("validated hom produced a non-functor: ") +
                           e.what());
  }
}

/// Tree edges to the identity, generators to their hom images. The hom's
/// presentation must have been built from this very tree.
inline GroupFunctor functor_from_tree_hom(const SpanningTree& tree, const GroupHom& h) {
  if (!(tree == h.domain().tree))
    throw domain_error("hom presentation was built from a different tree");
  return functor_via_tree(tree, h);
}

/// True when every arrow with both endpoints in the subspace carries the
/// identity.
inline bool is_trivial_on(const GroupFunctor& f, const SubSpace& a) {
  if (a.parent() != f.space())
    throw domain_error("subspace belongs to a different space");
  for (const auto& [x, y] : f.space().comparabilities())
    if (a.contains(x) && a.contains(y) && f.value(x, y) != f.group().identity())
      return false;
  return true;
}

/// The comma construction over a group-valued functor: total space on
/// base x G with (x,g) <= (x',g') iff x <= x' and g = g' * value(x<=x'),
/// projected to the first coordinate. Transitivity of that relation is a
/// consequence of functoriality and is asserted, never re-closed.
struct Covering {
  GroupFunctor functor;
  FiniteSpace total;
  PointMap projection;

  const FiniteSpace& base() const { return functor.space(); }
  const FiniteGroup& group() const { return functor.group(); }

  int point_index(int x, int g) const { return x * functor.group().size() + g; }
  int base_of(int idx) const { return idx / functor.group().size(); }
  int sheet_of(int idx) const { return idx % functor.group().size(); }
};

inline Covering comma_cover(const GroupFunctor& f) {
  const FiniteSpace& base = f.space();
  const FiniteGroup& grp = f.group();
  int n = base.size(), m = grp.size();
  int total_n = n * m;
  std::vector<std::string> labels;
  labels.reserve(total_n);
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g)
      labels.push_back("(" + base.label(x) + "," + grp.label(g) + ")");
  std::vector<unsigned char> rel(static_cast<size_t>(total_n) * total_n, 0);
  auto idx = [m](int x, int g) { return x * m + g; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!base.leq(x, y)) continue;
      for (int g = 0; g < m; ++g)
        rel[static_cast<size_t>(idx(x, grp.mul(g, f.value(x, y)))) * total_n +
            idx(y, g)] = 1;
    }
  // transitivity must already hold; a failure means the functor is corrupt
  for (int a = 0; a < total_n; ++a)
    for (int b = 0; b < total_n; ++b) {
      if (!rel[static_cast<size_t>(a) * total_n + b]) continue;
      for (int c = 0; c < total_n; ++c)
        if (rel[static_cast<size_t>(b) * total_n + c] &&
            !rel[static_cast<size_t>(a) * total_n + c])
          throw std::logic_error("comma order is not transitive at " + labels[a] +
                                 " <= " + labels[b] + " <= " + labels[c]);
    }
  FiniteSpace total = FiniteSpace::from_matrix(labels, std::move(rel));
  std::vector<int> proj(total_n);
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g) proj[idx(x, g)] = x;
  return Covering{f, total, PointMap(total, base, std::move(proj))};
}

/// Outcome of checking the three covering conditions, with witnesses.
struct CoveringReport {
  struct Failure {
    int condition = 0;
    std::string message;
  };
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  bool condition_ok(int c) const {
    for (const auto& f : failures)
      if (f.condition == c) return false;
    return true;
  }
};

/// Checks, for every base point x and sheet g: (1) the preimage of U_x is
/// the union of the U_(x,g), (2) those sets are mutually disjoint, and
/// (3) the projection maps each U_(x,g) onto U_x as an order isomorphism
/// whose inverse is x' -> (x', g * value(x' <= x)).
inline CoveringReport verify_covering(const Covering& c) {
  CoveringReport report;
  const FiniteSpace& base = c.base();
  const FiniteSpace& total = c.total;
  const FiniteGroup& grp = c.group();
  int m = grp.size();

  for (int x = 0; x < base.size(); ++x) {
    auto ux = base.minimal_open_set(x);
    std::vector<int> preimage;
    for (int t = 0; t < total.size(); ++t)
      if (std::binary_search(ux.begin(), ux.end(), c.projection(t)))
        preimage.push_back(t);

    std::vector<std::vector<int>> sheets;
    for (int g = 0; g < m; ++g)
      sheets.push_back(total.minimal_open_set(c.point_index(x, g)));

    // (1) union of sheets equals the preimage
    std::vector<int> sheet_union;
    for (const auto& s : sheets) sheet_union.insert(sheet_union.end(), s.begin(), s.end());
    std::sort(sheet_union.begin(), sheet_union.end());
    sheet_union.erase(std::unique(sheet_union.begin(), sheet_union.end()),
                      sheet_union.end());
    if (sheet_union != preimage) {
      std::vector<int> diff;
      std::set_symmetric_difference(sheet_union.begin(), sheet_union.end(),
                                    preimage.begin(), preimage.end(),
                                    std::back_inserter(diff));
      report.failures.push_back(
          {1, "at " + base.label(x) + ": preimage of U_" + base.label(x) +
                  " differs from the sheet union (witness " +
                  total.label(diff.front()) + ")"});
    }

    // (2) sheets are mutually disjoint
    for (int g = 0; g < m; ++g)
      for (int g2 = g + 1; g2 < m; ++g2) {
        std::vector<int> shared;
        std::set_intersection(sheets[g].begin(), sheets[g].end(), sheets[g2].begin(),
                              sheets[g2].end(), std::back_inserter(shared));
        if (!shared.empty())
          report.failures.push_back(
              {2, "at " + base.label(x) + ": " +
                      total.label(c.point_index(x, g)) + " and " +
                      total.label(c.point_index(x, g2)) +
                      " have overlapping neighbourhoods (share " +
                      total.label(shared.front()) + ")"});
      }

    // (3) each sheet projects isomorphically onto U_x
    for (int g = 0; g < m; ++g) {
      const auto& sheet = sheets[g];
      std::string at = "at " + total.label(c.point_index(x, g)) + ": ";
      std::vector<int> image;
      for (int t : sheet) image.push_back(c.projection(t));
      std::sort(image.begin(), image.end());
      bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
      if (!injective || image != ux) {
        report.failures.push_back(
            {3, at + "projection is not a bijection onto U_" + base.label(x)});
        continue;
      }
      bool section_ok = true;
      for (int xp : ux) {
        int phi = c.point_index(xp, grp.mul(g, c.functor.value(xp, x)));
        if (!std::binary_search(sheet.begin(), sheet.end(), phi)) {
          report.failures.push_back(
              {3, at + "section misses the sheet over " + base.label(xp)});
          section_ok = false;
          break;
        }
      }
      if (!section_ok) continue;
      bool order_ok = true;
      for (size_t iu = 0; iu < sheet.size() && order_ok; ++iu)
        for (size_t iv = 0; iv < sheet.size() && order_ok; ++iv) {
          int u = sheet[iu], v = sheet[iv];
          if (total.leq(u, v) != base.leq(c.projection(u), c.projection(v))) {
            report.failures.push_back(
                {3, at + "order mismatch between " + total.label(u) + " and " +
                        total.label(v)});
            order_ok = false;
          }
        }
    }
  }
  return report;
}

/// The deck transformation of a left translation: (x, h) -> (x, g * h).
inline PointMap deck_transformation(const Covering& c, int g) {
  const FiniteGroup& grp = c.group();
  if (g < 0 || g >= grp.size()) throw domain_error("unknown group element");
  std::vector<int> assign(c.total.size());
  for (int x = 0; x < c.base().size(); ++x)
    for (int h = 0; h < grp.size(); ++h)
      assign[c.point_index(x, h)] = c.point_index(x, grp.mul(g, h));
  return PointMap(c.total, c.total, std::move(assign));
}

/// Component count of the total space over a connected base; checked
/// against the coset count of the image subgroup.
inline int pi0_cover(const Covering& c, const GroupHom& h) {
  if (!c.base().is_connected())
    throw domain_error("component count of a cover needs a connected base");
  if (!(h.codomain() == c.group()) || h.domain().space != c.base())
    throw domain_error("hom does not match the covering");
  int count = static_cast<int>(c.total.connected_components().size());
  int expected = coset_count(c.group(), subgroup_generated(c.group(), h.images()));
  if (count != expected)
    throw std::logic_error("component count disagrees with the coset count");
  return count;
}

/// The inversion (x, g) -> (x, g^-1) onto the opposite comma space, whose
/// order couples the group element on the other side:
/// (x,g) <= (x',g') iff x <= x' and g' = value(x<=x') * g.
inline PointMap opposite_comma_iso(const Covering& c) {
  const FiniteSpace& base = c.base();
  const FiniteGroup& grp = c.group();
  int n = base.size(), m = grp.size();
  int total_n = n * m;
  std::vector<unsigned char> rel(static_cast<size_t>(total_n) * total_n, 0);
  auto idx = [m](int x, int g) { return x * m + g; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!base.leq(x, y)) continue;
      for (int g = 0; g < m; ++g)
        rel[static_cast<size_t>(idx(x, g)) * total_n +
            idx(y, grp.mul(c.functor.value(x, y), g))] = 1;
    }
  FiniteSpace opposite = FiniteSpace::from_matrix(c.total.points(), std::move(rel));
  std::vector<int> assign(total_n);
  for (int x = 0; x < n; ++x)
    for (int g = 0; g < m; ++g) assign[idx(x, g)] = idx(x, grp.inv(g));
  PointMap iso(c.total, opposite, assign);
  std::vector<int> back(total_n);
  for (int t = 0; t < total_n; ++t) back[assign[t]] = t;
  PointMap inverse(opposite, c.total, back);
  if (!is_continuous(iso) || !is_continuous(inverse))
    throw std::logic_error("comma inversion is not an order isomorphism");
  for (int t = 0; t < total_n; ++t)
    if (c.base_of(assign[t]) != c.base_of(t))
      throw std::logic_error("comma inversion does not commute with the projections");
  return iso;
}

/// Both routes of the product criterion for a subspace: the functor is
/// trivial on it, and, independently, the induced order on its preimage
/// decouples the group coordinate. The two must agree.
inline bool restriction_is_product(const Covering& c, const SubSpace& a) {
  if (a.parent() != c.base())
    throw domain_error("subspace belongs to a different space");
  bool trivial = is_trivial_on(c.functor, a);
  bool decoupled = true;
  int m = c.group().size();
  for (int x : a.carrier())
    for (int y : a.carrier())
      for (int g = 0; g < m && decoupled; ++g)
        for (int g2 = 0; g2 < m && decoupled; ++g2) {
          bool lifted = c.total.leq(c.point_index(x, g), c.point_index(y, g2));
          bool product = c.base().leq(x, y) && g == g2;
          if (lifted != product) decoupled = false;
        }
  if (trivial != decoupled)
    throw std::logic_error("product criterion disagrees with functor triviality");
  return trivial;
}

/// Per component of the subspace, the loop images of a component
/// presentation (over the restricted tree) transported to the hom's
/// basepoint and evaluated; all identity iff the functor is trivial on the
/// subspace. Requires the tree to restrict to a maximal tree of every
/// component.
inline bool triviality_criterion(const GroupHom& h, const SubSpace& a) {
  const FiniteSpace& x = h.domain().space;
  if (a.parent() != x) throw domain_error("subspace belongs to a different space");
  const SpanningTree& tree = h.domain().tree;
  int x0 = h.domain().basepoint;

  FiniteSpace induced = a.induced();
  for (const auto& comp : induced.connected_components()) {
    std::vector<int> comp_parent;
    for (int p : comp) comp_parent.push_back(a.to_parent(p));
    std::sort(comp_parent.begin(), comp_parent.end());
    auto in_comp = [&](int p) {
      return std::binary_search(comp_parent.begin(), comp_parent.end(), p);
    };

    // precondition: the tree restricted to this component spans it
    std::vector<Comparability> restricted;
    for (const auto& e : tree.edges())
      if (in_comp(e.first) && in_comp(e.second)) restricted.push_back(e);
    detail::UnionFind uf(x.size());
    for (const auto& e : restricted) uf.unite(e.first, e.second);
    bool spans = restricted.size() + 1 == comp_parent.size();
    for (int p : comp_parent)
      if (uf.find(p) != uf.find(comp_parent.front())) spans = false;
    if (!spans)
      throw domain_error(
          "tree does not restrict to a maximal tree of a component of the subspace");

    SubSpace comp_space(x, comp_parent);
    FiniteSpace cs = comp_space.induced();
    std::vector<Comparability> local_edges;
    for (const auto& e : restricted)
      local_edges.push_back(
          {*comp_space.from_parent(e.first), *comp_space.from_parent(e.second)});
    SpanningTree local_tree(cs, std::move(local_edges));

    int bp_parent = comp_parent.front();  // least label of the component
    auto p = pi1_presentation(cs, 0, local_tree);
    for (const auto& gen : p.generators) {
      PathWord local_loop = generator_loop(local_tree, 0, gen);
      PathWord loop{bp_parent, {}};
      for (const auto& s : local_loop.steps)
        loop.steps.push_back(Step{{comp_space.to_parent(s.relation.first),
                                   comp_space.to_parent(s.relation.second)},
                                  s.inverse});
      PathWord transported = basepoint_transport(tree, bp_parent, x0, loop);
      if (h.evaluate(reduce_word(tree, transported)) != h.codomain().identity())
        return false;
    }
  }
  return true;
}

/// Result of searching for a maximal tree whose induced functor is trivial
/// on a given subspace. `unknown` is reported when the space is too large
/// to enumerate spanning trees exactly.
struct TreeSearch {
  enum class Status { found, not_found, unknown };
  Status status = Status::unknown;
  std::optional<SpanningTree> tree;
};

/// Exhaustive search over the spanning trees of the comparability graph
/// (canonical order, first hit wins). Spaces with more than 10 points, or
/// graphs with more than 10^6 spanning trees, report `unknown`.
inline TreeSearch find_trivializing_tree(const GroupHom& h, const SubSpace& a) {
  const FiniteSpace& x = h.domain().space;
  if (a.parent() != x) throw domain_error("subspace belongs to a different space");
  if (x.size() > 10) return TreeSearch{TreeSearch::Status::unknown, std::nullopt};

  int n = x.size();
  // undirected comparable pairs with their available orientations
  std::vector<std::vector<Comparability>> pair_dirs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Comparability> dirs;
      if (x.leq(i, j)) dirs.push_back({i, j});
      if (x.leq(j, i)) dirs.push_back({j, i});
      if (!dirs.empty()) pair_dirs.push_back(std::move(dirs));
    }

  constexpr long long kMaxTrees = 1000000;
  long long examined = 0;
  std::optional<SpanningTree> hit;
  bool exhausted = true;

  std::vector<int> chosen;  // indices into pair_dirs
  auto ufind = [](std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  auto emit = [&](auto&& self, size_t pos) -> bool {  // true = stop searching
    if (static_cast<int>(chosen.size()) == n - 1) {
      // direction product in canonical order
      std::vector<int> pick(chosen.size(), 0);
      for (;;) {
        if (++examined > kMaxTrees) {
          exhausted = false;
          return true;
        }
        std::vector<Comparability> edges;
        for (size_t k = 0; k < chosen.size(); ++k)
          edges.push_back(pair_dirs[chosen[k]][pick[k]]);
        SpanningTree candidate(x, std::move(edges));
        if (is_trivial_on(functor_via_tree(candidate, h), a)) {
          hit = std::move(candidate);
          return true;
        }
        size_t k = 0;
        while (k < pick.size() &&
               ++pick[k] == static_cast<int>(pair_dirs[chosen[k]].size())) {
          pick[k] = 0;
          ++k;
        }
        if (k == pick.size()) break;
      }
      return false;
    }
    if (pos == pair_dirs.size()) return false;
    if (chosen.size() + (pair_dirs.size() - pos) < static_cast<size_t>(n - 1))
      return false;  // not enough edges left
    // take the pair if it joins two components
    const auto& e = pair_dirs[pos][0];
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    for (int k : chosen) {
      const auto& c = pair_dirs[k][0];
      parent[ufind(parent, c.first)] = ufind(parent, c.second);
    }
    if (ufind(parent, e.first) != ufind(parent, e.second)) {
      chosen.push_back(static_cast<int>(pos));
      if (self(self, pos + 1)) return true;
      chosen.pop_back();
    }
    return self(self, pos + 1);
  };
  emit(emit, 0);

  if (hit) return TreeSearch{TreeSearch::Status::found, std::move(hit)};
  if (!exhausted) return TreeSearch{TreeSearch::Status::unknown, std::nullopt};
  return TreeSearch{TreeSearch::Status::not_found, std::nullopt};
}

}  // namespace aspace
