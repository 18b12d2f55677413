#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groupoid.hpp"

namespace aspace {

/// A finite group given by its composition table. Construction validates
/// the axioms: identity and inverses exactly, associativity exhaustively up
/// to order 64 and on 10^4 seeded random triples beyond.
class FiniteGroup {
public:
  static FiniteGroup cyclic(int n) {
    if (n <= 0) throw domain_error("cyclic group order must be positive");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return FiniteGroup(std::move(labels), std::move(table));
  }

  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<int>> table) {
    return FiniteGroup(std::move(labels), std::move(table));
  }

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_.at(a).at(b); }
  int inv(int a) const { return inverse_.at(a); }
  const std::string& label(int g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    throw domain_error("unknown group element: " + std::string(label));
  }

  /// First pair (by element order) that fails to commute, if any.
  std::optional<std::pair<int, int>> nonabelian_witness() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return std::make_pair(a, b);
    return std::nullopt;
  }

  bool operator==(const FiniteGroup& o) const {
    return labels_ == o.labels_ && table_ == o.table_;
  }
  bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
      : labels_(std::move(labels)), table_(std::move(table)),
        n_(static_cast<int>(labels_.size())) {
    if (n_ == 0) throw domain_error("a group needs at least one element");
    {
      std::vector<std::string> sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw domain_error("duplicate element label");
    }
    if (static_cast<int>(table_.size()) != n_)
      throw domain_error("composition table must be square");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n_)
        throw domain_error("composition table must be square");
      for (int v : row)
        if (v < 0 || v >= n_) throw domain_error("composition table names an unknown element");
    }
    for (int e = 0; e < n_; ++e) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x)
        if (mul(e, x) != x || mul(x, e) != x) ok = false;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0) throw domain_error("composition table has no identity element");
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      if (inverse_[a] < 0)
        throw domain_error("element has no inverse: " + labels_[a]);
    }
    if (n_ <= 64) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c) check_associative(a, b, c);
    } else {
      std::mt19937 gen(0x5eed);
      for (int t = 0; t < 10000; ++t)
        check_associative(gen() % n_, gen() % n_, gen() % n_);
    }
  }

  void check_associative(int a, int b, int c) const {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw domain_error("composition table is not associative at (" + labels_[a] +
                         ", " + labels_[b] + ", " + labels_[c] + ")");
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int n_ = 0;
  int identity_ = -1;
  std::vector<int> inverse_;
};

/// Closure of a set of elements (plus the identity) under composition and
/// inverse, returned sorted.
inline std::vector<int> subgroup_generated(const FiniteGroup& g,
                                           const std::vector<int>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<int> queue{g.identity()};
  in[g.identity()] = 1;
  for (int e : gens) {
    if (e < 0 || e >= g.size()) throw domain_error("unknown group element");
    if (!in[e]) {
      in[e] = 1;
      queue.push_back(e);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    int ia = g.inv(a);
    if (!in[ia]) {
      in[ia] = 1;
      queue.push_back(ia);
    }
    for (size_t other = 0; other < queue.size(); ++other) {
      for (int p : {g.mul(a, queue[other]), g.mul(queue[other], a)}) {
        if (!in[p]) {
          in[p] = 1;
          queue.push_back(p);
        }
      }
    }
  }
  std::vector<int> out;
  for (int e = 0; e < g.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  if (h.empty()) return false;
  std::vector<char> in(g.size(), 0);
  for (int e : h) {
    if (e < 0 || e >= g.size()) throw domain_error("unknown group element");
    in[e] = 1;
  }
  if (!in[g.identity()]) return false;
  for (int a : h) {
    if (!in[g.inv(a)]) return false;
    for (int b : h)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

/// Left cosets a.H, ordered by least representative; their count is the
/// index [G : H].
inline std::vector<std::vector<int>> left_cosets(const FiniteGroup& g,
                                                 const std::vector<int>& h) {
  if (!is_subgroup(g, h)) throw domain_error("not a subgroup");
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<int>> cosets;
  for (int a = 0; a < g.size(); ++a) {
    if (seen[a]) continue;
    std::vector<int> coset;
    for (int x : h) coset.push_back(g.mul(a, x));
    std::sort(coset.begin(), coset.end());
    for (int x : coset) seen[x] = 1;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

inline int coset_count(const FiniteGroup& g, const std::vector<int>& h) {
  if (!is_subgroup(g, h)) throw domain_error("not a subgroup");
  return g.size() / static_cast<int>(h.size());
}

/// A homomorphism out of a presented fundamental group, given by generator
/// images; construction verifies that every relator lands on the identity.
class GroupHom {
public:
  GroupHom(Presentation domain, FiniteGroup codomain, std::vector<int> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)),
        images_(std::move(images)) {
    if (images_.size() != domain_.generators.size())
      throw domain_error("hom must assign an image to every generator");
    for (int v : images_)
      if (v < 0 || v >= codomain_.size())
        throw domain_error("hom image is not a group element");
    for (const auto& r : domain_.relators) {
      int v = evaluate(r);
      if (v != codomain_.identity())
        throw domain_error("relator " + domain_.word_to_string(r) +
                           " evaluates to " + codomain_.label(v) +
                           ", not the identity");
    }
  }

  const Presentation& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<int>& images() const { return images_; }

  /// Left-to-right product of the letter images.
  int evaluate(const GenWord& w) const {
    int acc = codomain_.identity();
    for (const auto& l : w) {
      int v = images_.at(l.gen);
      if (l.inverse) v = codomain_.inv(v);
      acc = codomain_.mul(acc, v);
    }
    return acc;
  }

private:
  Presentation domain_;
  FiniteGroup codomain_;
  std::vector<int> images_;
};

inline GroupHom hom_from_presentation(Presentation p, FiniteGroup g,
                                      std::vector<int> images) {
  return GroupHom(std::move(p), std::move(g), std::move(images));
}

}  // namespace aspace
