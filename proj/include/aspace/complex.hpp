#pragma once

#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smith.hpp"
#include "space.hpp"

namespace aspace {

/// A finitely generated abelian group: Z^betti plus one cyclic factor per
/// torsion coefficient. Torsion entries are > 1 and each divides the next.
struct HomologyGroup {
  int betti = 0;
  std::vector<BigInt> torsion;

  bool operator==(const HomologyGroup& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
  bool operator!=(const HomologyGroup& o) const { return !(*this == o); }

  std::string to_string() const {
    std::vector<std::string> parts;
    if (betti == 1) parts.push_back("Z");
    else if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
    for (const auto& t : torsion) parts.push_back("Z/" + t.to_string());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
    return out;
  }
};

/// An abstract simplicial complex on labelled vertices. Simplices are stored
/// as index-sorted vertex lists, bucketed by dimension, each bucket in
/// lexicographic order; the set is closed under non-empty subsets and every
/// vertex appears as a 0-simplex.
class SimplicialComplex {
public:
  static SimplicialComplex from_simplices(std::vector<std::string> vertices,
                                          const std::vector<std::vector<int>>& simplices) {
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    if (k.vertices_.empty()) throw domain_error("a complex needs at least one vertex");
    int n = static_cast<int>(k.vertices_.size());
    std::set<std::vector<int>> all;
    for (int v = 0; v < n; ++v) all.insert({v});
    std::vector<std::vector<int>> queue;
    for (auto s : simplices) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) throw domain_error("simplices must be non-empty");
      for (int v : s)
        if (v < 0 || v >= n) throw domain_error("simplex names an unknown vertex");
      if (all.insert(s).second) queue.push_back(std::move(s));
    }
    // close under taking faces
    while (!queue.empty()) {
      auto s = std::move(queue.back());
      queue.pop_back();
      if (s.size() <= 1) continue;
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        if (all.insert(face).second) queue.push_back(std::move(face));
      }
    }
    for (const auto& s : all) {
      int d = static_cast<int>(s.size()) - 1;
      if (d >= static_cast<int>(k.by_dim_.size())) k.by_dim_.resize(d + 1);
      k.by_dim_[d].push_back(s);
    }
    return k;
  }

  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  int count(int dim) const {
    if (dim < 0 || dim > dimension()) return 0;
    return static_cast<int>(by_dim_[dim].size());
  }

  long long total_count() const {
    long long c = 0;
    for (const auto& bucket : by_dim_) c += static_cast<long long>(bucket.size());
    return c;
  }

  const std::vector<std::vector<int>>& simplices(int dim) const {
    static const std::vector<std::vector<int>> empty;
    if (dim < 0 || dim > dimension()) return empty;
    return by_dim_[dim];
  }

private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<std::vector<int>>> by_dim_;
};

/// The order complex K(X) of a T0 space: vertices are the points and
/// simplices the non-empty chains. Non-T0 callers must quotient first; this
/// is enforced. `max_dim` truncates the chain walk (homology in degree n
/// needs simplices up to dimension n + 1).
inline SimplicialComplex order_complex(const FiniteSpace& x,
                                       int max_dim = std::numeric_limits<int>::max()) {
  if (!x.is_t0())
    throw domain_error(
        "order complex needs a T0 space; apply the Kolmogorov quotient first");
  int n = x.size();
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  auto extend = [&](auto&& self, int last) -> void {
    chains.push_back(current);
    if (static_cast<int>(current.size()) > max_dim) return;
    for (int next = 0; next < n; ++next) {
      if (next == last || !x.leq(last, next)) continue;
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  for (int start = 0; start < n; ++start) {
    current.assign(1, start);
    extend(extend, start);
  }
  for (auto& c : chains) std::sort(c.begin(), c.end());
  return SimplicialComplex::from_simplices(x.points(), chains);
}

/// Simplicial chain complex with integer coefficients: one boundary matrix
/// per positive dimension under the fixed vertex order. The identity
/// boundary-of-boundary = 0 is checked at construction.
class ChainComplex {
public:
  explicit ChainComplex(const SimplicialComplex& k) {
    int top = k.dimension();
    sizes_.resize(top + 1);
    for (int d = 0; d <= top; ++d) sizes_[d] = k.count(d);
    boundaries_.resize(top + 1);
    for (int d = 1; d <= top; ++d) {
      std::map<std::vector<int>, int> row_of;
      const auto& lower = k.simplices(d - 1);
      for (int i = 0; i < static_cast<int>(lower.size()); ++i) row_of[lower[i]] = i;
      IntMatrix m(lower.size(), std::vector<long long>(k.count(d), 0));
      const auto& upper = k.simplices(d);
      for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
        const auto& s = upper[j];
        long long sign = 1;
        for (size_t drop = 0; drop < s.size(); ++drop) {
          std::vector<int> face;
          for (size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
          m[row_of.at(face)][j] += sign;
          sign = -sign;
        }
      }
      boundaries_[d] = std::move(m);
    }
    check_boundary_squares_to_zero();
  }

  int top_dimension() const { return static_cast<int>(sizes_.size()) - 1; }

  int basis_size(int n) const {
    if (n < 0 || n > top_dimension()) return 0;
    return sizes_[n];
  }

  /// The matrix of d_n from n-chains to (n-1)-chains; empty when either
  /// basis is empty (in particular for n = 0 and n beyond the top).
  const IntMatrix& boundary(int n) const {
    static const IntMatrix empty;
    if (n < 1 || n > top_dimension()) return empty;
    return boundaries_[n];
  }

private:
  void check_boundary_squares_to_zero() const {
    for (int n = 2; n <= top_dimension(); ++n) {
      const IntMatrix& a = boundary(n - 1);
      const IntMatrix& b = boundary(n);
      if (a.empty() || b.empty()) continue;
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b[0].size(); ++j) {
          long long acc = 0;
          for (size_t t = 0; t < b.size(); ++t) acc += a[i][t] * b[t][j];
          if (acc != 0)
            throw domain_error("boundary composition is non-zero; corrupt complex");
        }
    }
  }

  std::vector<int> sizes_;
  std::vector<IntMatrix> boundaries_;
};

inline HomologyGroup homology(const ChainComplex& c, int n) {
  if (n < 0) throw domain_error("homology dimension must be non-negative");
  int kernel_rank = c.basis_size(n) - smith_normal_form(c.boundary(n)).rank;
  auto image = smith_normal_form(c.boundary(n + 1));
  HomologyGroup h;
  h.betti = kernel_rank - image.rank;
  for (const auto& f : image.invariant_factors)
    if (f > BigInt(1)) h.torsion.push_back(f);
  return h;
}

inline HomologyGroup homology(const SimplicialComplex& k, int n) {
  return homology(ChainComplex(k), n);
}

/// H_0 .. H_max_n of a space, through the Kolmogorov quotient when the
/// input is not T0 (the quotient is a homotopy equivalence, so nothing is
/// lost). The order complex is truncated at max_n + 1.
inline std::vector<HomologyGroup> homology_of_space(const FiniteSpace& x, int max_n = 3) {
  if (max_n < 0) throw domain_error("homology dimension must be non-negative");
  FiniteSpace t0 = x.is_t0() ? x : kolmogorov_quotient(x).space;
  ChainComplex c(order_complex(t0, max_n + 1));
  std::vector<HomologyGroup> out;
  out.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(homology(c, n));
  return out;
}

}  // namespace aspace
