#pragma once

#include <string>
#include <vector>

#include "covering.hpp"
#include "space.hpp"

namespace aspace {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

// node ids plus display labels for the T0 quotient; indistinguishable
// points merge into one node labelled with every member
struct HasseView {
  FiniteSpace quotient;
  std::vector<std::string> display;  // per quotient point
  std::vector<int> class_of;         // per original point
};

inline HasseView make_hasse_view(const FiniteSpace& x) {
  auto q = kolmogorov_quotient(x);
  std::vector<std::string> display(q.space.size());
  for (int p = 0; p < x.size(); ++p) {
    auto& d = display[q.projection(p)];
    if (!d.empty()) d += "=";
    d += x.label(p);
  }
  return HasseView{q.space, std::move(display), q.projection.assignment};
}

}  // namespace detail

/// Hasse diagram of a space in DOT: the transitive reduction of the T0
/// quotient, drawn bottom-up; a class of indistinguishable points becomes a
/// single node labelled with all of its members.
inline std::string emit_dot(const FiniteSpace& x) {
  auto view = detail::make_hasse_view(x);
  std::string out = "digraph poset {\n  rankdir=BT;\n";
  for (int p = 0; p < view.quotient.size(); ++p) {
    out += "  " + detail::dot_quote(view.quotient.label(p));
    if (view.display[p] != view.quotient.label(p))
      out += " [label=" + detail::dot_quote(view.display[p]) + "]";
    out += ";\n";
  }
  for (auto [a, b] : cover_relations(view.quotient))
    out += "  " + detail::dot_quote(view.quotient.label(a)) + " -> " +
           detail::dot_quote(view.quotient.label(b)) + ";\n";
  out += "}\n";
  return out;
}

/// DOT of a covering's total space with each fiber ranked over its base
/// point, so the sheets line up above the base in the drawing.
inline std::string emit_dot(const Covering& c) {
  auto view = detail::make_hasse_view(c.total);
  std::string out = "digraph cover {\n  rankdir=BT;\n";
  for (int x = 0; x < c.base().size(); ++x) {
    out += "  { rank=same;";
    for (int q = 0; q < view.quotient.size(); ++q) {
      // place each quotient node with the fiber of its representative
      int rep = -1;
      for (int t = 0; t < c.total.size() && rep < 0; ++t)
        if (view.class_of[t] == q) rep = t;
      if (c.projection(rep) == x)
        out += " " + detail::dot_quote(view.quotient.label(q)) + ";";
    }
    out += " }\n";
  }
  for (int p = 0; p < view.quotient.size(); ++p) {
    out += "  " + detail::dot_quote(view.quotient.label(p));
    if (view.display[p] != view.quotient.label(p))
      out += " [label=" + detail::dot_quote(view.display[p]) + "]";
    out += ";\n";
  }
  for (auto [a, b] : cover_relations(view.quotient))
    out += "  " + detail::dot_quote(view.quotient.label(a)) + " -> " +
           detail::dot_quote(view.quotient.label(b)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace aspace
