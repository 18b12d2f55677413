#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "groupoid.hpp"
#include "space.hpp"

namespace aspace {

namespace detail {

inline std::string strip_comment_and_trim(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

// accepts "a < c", "a<c", "a< c"; returns the two labels
inline std::pair<std::string, std::string> parse_relation_item(const std::string& item,
                                                               const std::string& where) {
  std::string joined;
  for (const auto& t : tokenize(item)) joined += t;
  auto lt = joined.find('<');
  if (lt == std::string::npos || joined.find('<', lt + 1) != std::string::npos)
    throw parse_error(where + ": expected a relation of the form x < y, got '" +
                      item + "'");
  std::string a = joined.substr(0, lt), b = joined.substr(lt + 1);
  if (a.empty() || b.empty())
    throw parse_error(where + ": expected a relation of the form x < y, got '" +
                      item + "'");
  return {a, b};
}

}  // namespace detail

/// Poset text format: a `points:` line followed by one relation per line
/// (`a < c`), whitespace tolerant, `#` starts a comment. The parser takes
/// the reflexive-transitive closure, so only generating relations are
/// needed, and mutual pairs describe non-T0 spaces.
inline FiniteSpace parse_poset(std::istream& in) {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> pairs;
  bool have_points = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment_and_trim(raw);
    if (line.empty()) continue;
    std::string where = "line " + std::to_string(lineno);
    if (!have_points) {
      auto tokens = detail::tokenize(line);
      if (tokens.empty() || tokens.front() != "points:")
        throw parse_error(where + ": the first line must be 'points: <labels>'");
      points.assign(tokens.begin() + 1, tokens.end());
      if (points.empty()) throw parse_error(where + ": no points listed");
      for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
          if (points[i] == points[j])
            throw parse_error(where + ": duplicate point label " + points[i]);
      have_points = true;
      continue;
    }
    auto [a, b] = detail::parse_relation_item(line, where);
    for (const auto& l : {a, b})
      if (std::find(points.begin(), points.end(), l) == points.end())
        throw parse_error(where + ": unknown point " + l);
    pairs.emplace_back(a, b);
  }
  if (!have_points) throw parse_error("poset file has no points: line");
  return FiniteSpace::from_relations(points, pairs);
}

inline FiniteSpace parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

inline FiniteSpace load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open poset file: " + path);
  return parse_poset(in);
}

/// Emits every comparability, which round-trips exactly through the parser
/// (the closure of the full relation list is itself).
inline std::string write_poset(const FiniteSpace& x) {
  std::string out = "points:";
  for (const auto& p : x.points()) out += " " + p;
  out += "\n";
  for (auto [i, j] : x.comparabilities())
    out += x.label(i) + " < " + x.label(j) + "\n";
  return out;
}

/// Comma-separated edge list, e.g. "a<c, b<c, b<d"; the empty string is an
/// empty list.
inline std::vector<Comparability> parse_edge_list(const FiniteSpace& x,
                                                  const std::string& spec) {
  std::vector<Comparability> edges;
  std::string item;
  std::istringstream in(spec);
  while (std::getline(in, item, ',')) {
    item = detail::strip_comment_and_trim(item);
    if (item.empty()) continue;
    auto [a, b] = detail::parse_relation_item(item, "edge list");
    if (!x.has_point(a)) throw parse_error("edge list: unknown point " + a);
    if (!x.has_point(b)) throw parse_error("edge list: unknown point " + b);
    edges.emplace_back(x.index_of(a), x.index_of(b));
  }
  return edges;
}

inline std::string format_edge_list(const FiniteSpace& x,
                                    const std::vector<Comparability>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ", ";
    out += x.label(e.first) + "<" + x.label(e.second);
  }
  return out;
}

/// Group table format: an `elements:` line, then one table row per element,
/// entries by label, row = left operand. `#` comments allowed.
inline FiniteGroup parse_group_table(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
  bool have_elements = false;
  std::string raw;
  int lineno = 0;
  auto index_of = [&](const std::string& l, const std::string& where) {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    throw parse_error(where + ": unknown element " + l);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment_and_trim(raw);
    if (line.empty()) continue;
    std::string where = "line " + std::to_string(lineno);
    auto tokens = detail::tokenize(line);
    if (!have_elements) {
      if (tokens.empty() || tokens.front() != "elements:")
        throw parse_error(where + ": the first line must be 'elements: <labels>'");
      labels.assign(tokens.begin() + 1, tokens.end());
      if (labels.empty()) throw parse_error(where + ": no elements listed");
      have_elements = true;
      continue;
    }
    if (table.size() == labels.size())
      throw parse_error(where + ": more table rows than elements");
    if (tokens.size() != labels.size())
      throw parse_error(where + ": expected " + std::to_string(labels.size()) +
                        " entries in the table row");
    std::vector<int> row;
    for (const auto& t : tokens) row.push_back(index_of(t, where));
    table.push_back(std::move(row));
  }
  if (!have_elements) throw parse_error("group table has no elements: line");
  if (table.size() != labels.size())
    throw parse_error("group table has fewer rows than elements");
  return FiniteGroup::from_table(labels, table);
}

/// Group spec: `Z<n>` for a cyclic group or `table:<path>` for a file in
/// the table format.
inline FiniteGroup parse_group_spec(const std::string& spec) {
  std::string s = detail::strip_comment_and_trim(spec);
  if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'z') &&
      s.find_first_not_of("0123456789", 1) == std::string::npos) {
    long n = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      n = n * 10 + (s[i] - '0');
      if (n > 1024) throw parse_error("cyclic group order is too large");
    }
    return FiniteGroup::cyclic(static_cast<int>(n));
  }
  if (s.rfind("table:", 0) == 0) {
    std::string path = s.substr(6);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open group table: " + path);
    return parse_group_table(in);
  }
  throw parse_error("unrecognized group spec '" + s +
                    "' (use Z<n> or table:<path>)");
}

/// Hom spec: assignments `g[a<d] -> 2`, separated by commas, semicolons or
/// newlines. Every generator of the presentation must receive exactly one
/// image. Returns the image list aligned with the generators.
inline std::vector<int> parse_hom_spec(const Presentation& p, const FiniteGroup& g,
                                       const std::string& spec) {
  std::vector<int> images(p.generators.size(), -1);
  std::string normalized = spec;
  for (auto& c : normalized)
    if (c == ';' || c == '\n') c = ',';
  std::istringstream in(normalized);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = detail::strip_comment_and_trim(item);
    if (item.empty()) continue;
    auto arrow = item.find("->");
    if (arrow == std::string::npos)
      throw parse_error("hom spec: expected 'g[x<y] -> element', got '" + item + "'");
    std::string lhs = detail::strip_comment_and_trim(item.substr(0, arrow));
    std::string rhs = detail::strip_comment_and_trim(item.substr(arrow + 2));
    std::string compact;
    for (const auto& t : detail::tokenize(lhs)) compact += t;
    if (compact.size() < 4 || compact.rfind("g[", 0) != 0 || compact.back() != ']')
      throw parse_error("hom spec: malformed generator name '" + lhs + "'");
    auto [a, b] = detail::parse_relation_item(compact.substr(2, compact.size() - 3),
                                              "hom spec");
    if (!p.space.has_point(a) || !p.space.has_point(b))
      throw parse_error("hom spec: unknown point in generator '" + compact + "'");
    auto gen = p.generator_index({p.space.index_of(a), p.space.index_of(b)});
    if (!gen)
      throw domain_error("hom spec: " + compact +
                         " is not a generator of the presentation");
    if (rhs.empty()) throw parse_error("hom spec: missing image in '" + item + "'");
    int value = g.index_of(rhs);
    if (images[*gen] >= 0)
      throw domain_error("hom spec: generator " + compact + " assigned twice");
    images[*gen] = value;
  }
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] < 0)
      throw domain_error("hom spec: no image for generator " +
                         p.generator_name(static_cast<int>(i)));
  return images;
}

}  // namespace aspace
