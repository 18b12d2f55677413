#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "covering.hpp"
#include "dot.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "groupoid.hpp"
#include "io.hpp"
#include "space.hpp"

namespace aspace::cli {

namespace detail {

struct Options {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
  std::set<std::string> switches;

  bool has(const std::string& name) const { return flags.count(name) > 0; }
  const std::string& get(const std::string& name) const { return flags.at(name); }
  std::string get_or(const std::string& name, const std::string& fallback) const {
    auto it = flags.find(name);
    return it == flags.end() ? fallback : it->second;
  }
  bool on(const std::string& name) const { return switches.count(name) > 0; }
};

inline Options parse_options(const std::vector<std::string>& args, size_t from,
                             const std::set<std::string>& valued,
                             const std::set<std::string>& boolean) {
  Options o;
  for (size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) {
      o.positional.push_back(a);
      continue;
    }
    std::string name = a.substr(2);
    if (boolean.count(name)) {
      o.switches.insert(name);
      continue;
    }
    if (!valued.count(name)) throw parse_error("unknown option --" + name);
    if (i + 1 >= args.size()) throw parse_error("option --" + name + " needs a value");
    if (!o.flags.emplace(name, args[++i]).second)
      throw parse_error("option --" + name + " given twice");
  }
  return o;
}

inline FiniteSpace positional_poset(const Options& o) {
  if (o.positional.size() != 1)
    throw parse_error("expected exactly one poset file argument");
  return load_poset(o.positional.front());
}

inline int parse_nonnegative(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error(what + " must be a non-negative integer, got '" + text + "'");
  long v = 0;
  for (char c : text) {
    v = v * 10 + (c - '0');
    if (v > 1000000) throw parse_error(what + " is absurdly large");
  }
  return static_cast<int>(v);
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write file: " + path);
  out << text;
}

inline SpanningTree tree_from_options(const FiniteSpace& x, const Options& o) {
  if (o.has("tree") && o.get("tree") != "auto") {
    if (o.has("forest"))
      throw parse_error("--tree and --forest are mutually exclusive");
    return SpanningTree(x, parse_edge_list(x, o.get("tree")));
  }
  std::vector<Comparability> forest;
  if (o.has("forest")) forest = parse_edge_list(x, o.get("forest"));
  return extend_forest_to_tree(x, forest);
}

inline int basepoint_from_options(const FiniteSpace& x, const Options& o) {
  if (!o.has("basepoint")) return 0;
  return x.index_of(o.get("basepoint"));
}

inline nlohmann::json torsion_json(const std::vector<BigInt>& torsion) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : torsion) {
    try {
      arr.push_back(t.to_int64());
    } catch (const domain_error&) {
      arr.push_back(t.to_string());
    }
  }
  return arr;
}

struct CoverPipeline {
  FiniteSpace space;
  SpanningTree tree;
  Presentation pres;
  FiniteGroup group;
  GroupHom hom;
  Covering cover;
};

inline CoverPipeline build_cover(const Options& o) {
  FiniteSpace space = positional_poset(o);
  SpanningTree tree = tree_from_options(space, o);
  Presentation pres = pi1_presentation(space, basepoint_from_options(space, o), tree);
  if (!o.has("group")) throw parse_error("missing required option --group");
  if (!o.has("hom")) throw parse_error("missing required option --hom");
  FiniteGroup group = parse_group_spec(o.get("group"));
  GroupHom hom(pres, group, parse_hom_spec(pres, group, o.get("hom")));
  Covering cover = comma_cover(functor_from_tree_hom(tree, hom));
  return CoverPipeline{std::move(space), std::move(tree), std::move(pres),
                       std::move(group), std::move(hom), std::move(cover)};
}

inline int cmd_info(const Options& o, std::ostream& out) {
  FiniteSpace x = positional_poset(o);
  out << "points: " << x.size() << "\n";
  out << "t0: " << (x.is_t0() ? "yes" : "no") << "\n";
  out << "components: " << x.connected_components().size() << "\n";
  out << "comparabilities: " << x.comparabilities().size() << "\n";
  return 0;
}

inline int cmd_pi1(const Options& o, std::ostream& out) {
  FiniteSpace x = positional_poset(o);
  SpanningTree tree = tree_from_options(x, o);
  Presentation p = pi1_presentation(x, basepoint_from_options(x, o), tree);
  HomologyGroup ab = abelianization(p);
  if (o.on("json")) {
    nlohmann::json j;
    j["basepoint"] = x.label(p.basepoint);
    j["tree"] = nlohmann::json::array();
    for (const auto& e : tree.edges())
      j["tree"].push_back(x.label(e.first) + "<" + x.label(e.second));
    j["generators"] = nlohmann::json::array();
    for (size_t g = 0; g < p.generators.size(); ++g)
      j["generators"].push_back(p.generator_name(static_cast<int>(g)));
    j["relators"] = nlohmann::json::array();
    for (const auto& r : p.relators) {
      nlohmann::json word = nlohmann::json::array();
      for (const auto& l : r) word.push_back((l.gen + 1) * (l.inverse ? -1 : 1));
      j["relators"].push_back(word);
    }
    j["abelianization"] = {{"betti", ab.betti}, {"torsion", torsion_json(ab.torsion)}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << p.to_string() << "\n";
  out << "H1 = " << ab.to_string() << "\n";
  return 0;
}

inline int cmd_homology(const Options& o, std::ostream& out) {
  FiniteSpace x = positional_poset(o);
  int max_n = parse_nonnegative(o.get_or("max-dim", "3"), "--max-dim");
  FiniteSpace t0 = x.is_t0() ? x : kolmogorov_quotient(x).space;
  auto k = order_complex(t0, max_n + 1);
  ChainComplex chains(k);
  int top = std::min(max_n, k.dimension());
  if (o.on("json")) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= top; ++n) {
      HomologyGroup h = homology(chains, n);
      rows.push_back({{"dim", n}, {"betti", h.betti}, {"torsion", torsion_json(h.torsion)}});
    }
    out << nlohmann::json{{"homology", rows}}.dump(2) << "\n";
    return 0;
  }
  for (int n = 0; n <= top; ++n)
    out << "H" << n << " = " << homology(chains, n).to_string() << "\n";
  return 0;
}

inline int cmd_tree(const Options& o, std::ostream& out) {
  FiniteSpace x = positional_poset(o);
  SpanningTree tree = tree_from_options(x, o);
  out << "tree: " << format_edge_list(x, tree.edges()) << "\n";
  return 0;
}

inline int cmd_quotient(const Options& o, std::ostream& out) {
  FiniteSpace x = positional_poset(o);
  auto q = kolmogorov_quotient(x);
  std::string text = "points:";
  for (const auto& p : q.space.points()) text += " " + p;
  text += "\n";
  for (int c = 0; c < q.space.size(); ++c) {
    std::vector<std::string> members;
    for (int p = 0; p < x.size(); ++p)
      if (q.projection(p) == c) members.push_back(x.label(p));
    if (members.size() < 2) continue;
    text += "# class " + q.space.label(c) + ":";
    for (const auto& m : members) text += " " + m;
    text += "\n";
  }
  for (auto [i, j] : q.space.comparabilities())
    text += q.space.label(i) + " < " + q.space.label(j) + "\n";
  if (o.has("out")) {
    write_text_file(o.get("out"), text);
    return 0;
  }
  out << text;
  return 0;
}

inline int cmd_dot(const Options& o, std::ostream& out) {
  FiniteSpace x = positional_poset(o);
  std::string text = emit_dot(x);
  if (o.has("out")) {
    write_text_file(o.get("out"), text);
    return 0;
  }
  out << text;
  return 0;
}

inline int cmd_cover(const Options& o, std::ostream& out) {
  CoverPipeline p = build_cover(o);
  out << "points: " << p.cover.total.size() << "\n";
  out << "components: " << pi0_cover(p.cover, p.hom) << "\n";
  int code = 0;
  if (o.on("verify")) {
    auto report = verify_covering(p.cover);
    out << "covering conditions: " << (report.ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : report.failures)
      out << "  condition " << f.condition << " " << f.message << "\n";
    if (!report.ok()) code = 1;
  }
  if (o.has("out")) write_text_file(o.get("out"), write_poset(p.cover.total));
  if (o.has("dot")) write_text_file(o.get("dot"), emit_dot(p.cover));
  return code;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  CoverPipeline p = build_cover(o);
  auto report = verify_covering(p.cover);
  out << "points: " << p.cover.total.size() << "\n";
  out << "components: " << pi0_cover(p.cover, p.hom) << "\n";
  for (int condition = 1; condition <= 3; ++condition) {
    out << "condition " << condition << ": "
        << (report.condition_ok(condition) ? "PASS" : "FAIL") << "\n";
    for (const auto& f : report.failures)
      if (f.condition == condition) out << "  " << f.message << "\n";
  }
  out << "covering conditions: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace detail

inline const char* usage() {
  return "usage: aspace <command> [options]\n"
         "\n"
         "commands:\n"
         "  info <poset>                          basic facts about a space\n"
         "  pi1 <poset> [--basepoint L] [--tree SPEC|auto] [--forest SPEC] [--json]\n"
         "                                        fundamental group presentation\n"
         "  homology <poset> [--max-dim N] [--json]\n"
         "                                        integral homology of the order complex\n"
         "  tree <poset> [--forest SPEC]          deterministic maximal tree\n"
         "  quotient <poset> [--out PATH]         Kolmogorov quotient as a poset file\n"
         "  dot <poset> [--out PATH]              Hasse diagram in DOT\n"
         "  cover <poset> --group G --hom H [--tree SPEC|auto] [--forest SPEC]\n"
         "        [--basepoint L] [--verify] [--out PATH] [--dot PATH]\n"
         "                                        comma-category covering space\n"
         "  verify <poset> --group G --hom H [--tree SPEC|auto] [--forest SPEC]\n"
         "        [--basepoint L]                 detailed covering-condition report\n";
}

/// Dispatches a command line. Exit codes: 0 success, 1 domain errors
/// (violated preconditions, failed verification), 2 parse errors.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  try {
    if (args.empty()) throw parse_error("no command given");
    const std::string& verb = args.front();
    using detail::parse_options;
    if (verb == "help" || verb == "--help" || verb == "-h") {
      out << usage();
      return 0;
    }
    if (verb == "info")
      return detail::cmd_info(parse_options(args, 1, {}, {}), out);
    if (verb == "pi1")
      return detail::cmd_pi1(
          parse_options(args, 1, {"basepoint", "tree", "forest"}, {"json"}), out);
    if (verb == "homology")
      return detail::cmd_homology(parse_options(args, 1, {"max-dim"}, {"json"}), out);
    if (verb == "tree")
      return detail::cmd_tree(parse_options(args, 1, {"forest"}, {}), out);
    if (verb == "quotient")
      return detail::cmd_quotient(parse_options(args, 1, {"out"}, {}), out);
    if (verb == "dot")
      return detail::cmd_dot(parse_options(args, 1, {"out"}, {}), out);
    if (verb == "cover")
      return detail::cmd_cover(
          parse_options(args, 1,
                        {"group", "hom", "tree", "forest", "basepoint", "out", "dot"},
                        {"verify"}),
          out);
    if (verb == "verify")
      return detail::cmd_verify(
          parse_options(args, 1, {"group", "hom", "tree", "forest", "basepoint"}, {}),
          out);
    throw parse_error("unknown command '" + verb + "' (try 'aspace help')");
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace aspace::cli
