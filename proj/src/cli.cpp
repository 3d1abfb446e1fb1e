#include "bmg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "bmg/completion.hpp"
#include "bmg/construct.hpp"
#include "bmg/errors.hpp"
#include "bmg/forbidden.hpp"
#include "bmg/io.hpp"
#include "bmg/lrt.hpp"
#include "bmg/oracle.hpp"

namespace bmg::cli {
namespace {

using nlohmann::json;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
};

std::string read_input(const Context& ctx, const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::string_view> role_names(SubgraphKind kind) {
  switch (kind) {
    case SubgraphKind::F1:
    case SubgraphKind::F2: return {"x1", "x2", "y1", "y2"};
    case SubgraphKind::F3: return {"x1", "x2", "y1", "y2", "y3"};
    case SubgraphKind::Hourglass: return {"x", "x'", "y", "y'"};
  }
  return {};
}

std::string witness_text(const ColoredDigraph& g, const SubgraphWitness& w) {
  std::string s(to_string(w.kind));
  const auto roles = role_names(w.kind);
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    s += " " + std::string(roles[i]) + "=" + g.name(w.vertices[i]);
  return s;
}

json witness_json(const ColoredDigraph& g, const SubgraphWitness& w) {
  json roles = json::object();
  json vertices = json::array();
  const auto names = role_names(w.kind);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    roles[std::string(names[i])] = g.name(w.vertices[i]);
    vertices.push_back(g.name(w.vertices[i]));
  }
  return {{"kind", std::string(to_string(w.kind))}, {"roles", roles}, {"vertices", vertices}};
}

std::string verdict_text(const ColoredDigraph& g, const TwoBmgVerdict& v) {
  if (v.sink) return "sink " + g.name(*v.sink);
  if (v.witness) return witness_text(g, *v.witness);
  return "no certificate";
}

json verdict_json(const ColoredDigraph& g, const TwoBmgVerdict& v) {
  json j = {{"is_2bmg", v.is_bmg}};
  if (v.sink) {
    j["reason"] = "sink";
    j["sink"] = g.name(*v.sink);
  } else if (v.witness) {
    j["reason"] = "forbidden_subgraph";
    j["witness"] = witness_json(g, *v.witness);
  }
  return j;
}

// Arcs as (source name, target name), sorted by name.
std::vector<std::pair<std::string, std::string>> named_arcs(const ColoredDigraph& g,
                                                            const ArcSet& arcs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Arc& a : arcs) out.emplace_back(g.name(a.src), g.name(a.dst));
  std::sort(out.begin(), out.end());
  return out;
}

json graph_json(const ColoredDigraph& g) {
  json vertices = json::array();
  std::vector<VertexId> order(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
  for (VertexId v : order) vertices.push_back({{"name", g.name(v)}, {"color", g.color(v).name()}});
  json arcs = json::array();
  for (const auto& [s, d] : named_arcs(g, g.arcs())) arcs.push_back({s, d});
  return {{"vertices", vertices}, {"arcs", arcs}};
}

int report_not_2bmg(const Context& ctx, const ColoredDigraph& g, const NotA2BmgError& e) {
  ctx.err << "not a 2-BMG: " << verdict_text(g, e.verdict()) << '\n';
  if (ctx.as_json) {
    ctx.out << verdict_json(g, e.verdict()).dump(2) << '\n';
  } else {
    ctx.out << "not a 2-BMG\n";
  }
  return kNotA2Bmg;
}

std::string leaf_set(const PhyloTree& t, NodeId v) {
  std::vector<std::string> names;
  for (NodeId l : subtree_leaves(t, v)) names.push_back(t.name(l));
  std::sort(names.begin(), names.end());
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

// ---------------------------------------------------------------------------

int cmd_from_tree(const Context& ctx, const std::string& path) {
  const PhyloTree t = io::parse_tree(read_input(ctx, path));
  const ColoredDigraph g = bmg_from_tree(t);
  if (ctx.as_json)
    ctx.out << graph_json(g).dump(2) << '\n';
  else
    ctx.out << io::serialize_graph(g);
  return kOk;
}

void emit_tree(const Context& ctx, const PhyloTree& t) {
  if (ctx.as_json)
    ctx.out << json{{"tree", io::serialize_tree(t)}}.dump(2) << '\n';
  else
    ctx.out << io::serialize_tree(t) << '\n';
}

int cmd_lrt(const Context& ctx, const std::string& path) {
  const std::string text = read_input(ctx, path);
  if (io::looks_like_tree(text)) {
    emit_tree(ctx, lrt_from_tree(io::parse_tree(text)));
    return kOk;
  }
  const ColoredDigraph g = io::parse_graph(text);
  try {
    emit_tree(ctx, lrt_from_2bmg(g));
  } catch (const NotA2BmgError& e) {
    return report_not_2bmg(ctx, g, e);
  }
  return kOk;
}

int cmd_recognize(const Context& ctx, const std::string& path) {
  const ColoredDigraph g = io::parse_graph(read_input(ctx, path));
  const TwoBmgVerdict v = is_2bmg(g);
  if (!v) return report_not_2bmg(ctx, g, NotA2BmgError("not a 2-BMG", v));
  if (ctx.as_json)
    ctx.out << verdict_json(g, v).dump(2) << '\n';
  else
    ctx.out << "2-BMG\n";
  return kOk;
}

int cmd_check_be(const Context& ctx, const std::string& path) {
  const std::string text = read_input(ctx, path);
  if (io::looks_like_tree(text)) {
    const PhyloTree t = io::parse_tree(text);
    const auto violation = tree_binary_explainability_violation(t);
    if (ctx.as_json) {
      json j = {{"binary_explainable", !violation.has_value()}};
      if (violation) {
        j["violation"] = {{"u", leaf_set(t, violation->u)},   {"v1", leaf_set(t, violation->v1)},
                          {"v2", leaf_set(t, violation->v2)}, {"v3", leaf_set(t, violation->v3)},
                          {"r", violation->r.name()},         {"s", violation->s.name()}};
      }
      ctx.out << j.dump(2) << '\n';
    } else if (!violation) {
      ctx.out << "binary-explainable\n";
    } else {
      ctx.out << "not binary-explainable\n"
              << "violation u=" << leaf_set(t, violation->u) << " v1=" << leaf_set(t, violation->v1)
              << " v2=" << leaf_set(t, violation->v2) << " v3=" << leaf_set(t, violation->v3)
              << " r=" << violation->r.name() << " s=" << violation->s.name() << '\n';
    }
    return kOk;
  }

  const ColoredDigraph g = io::parse_graph(text);
  const bool two_colored = g.colors().size() <= 2;
  if (two_colored) {
    const TwoBmgVerdict v = is_2bmg(g);
    if (!v) return report_not_2bmg(ctx, g, NotA2BmgError("not a 2-BMG", v));
  }
  const auto hourglass = find_hourglass(g);
  if (ctx.as_json) {
    json j = {{"hourglass_free", !hourglass.has_value()}};
    if (two_colored) j["binary_explainable"] = !hourglass.has_value();
    if (hourglass) j["witness"] = witness_json(g, *hourglass);
    ctx.out << j.dump(2) << '\n';
    return kOk;
  }
  if (hourglass) {
    ctx.out << (two_colored ? "not binary-explainable\n" : "hourglass found\n")
            << witness_text(g, *hourglass) << '\n';
  } else {
    ctx.out << (two_colored ? "binary-explainable\n" : "hourglass-free\n");
  }
  return kOk;
}

int cmd_complete(const Context& ctx, const std::string& path) {
  const ColoredDigraph g = io::parse_graph(read_input(ctx, path));
  try {
    const CompletionResult r = complete_to_bebmg(g);
    const auto inserted = named_arcs(g, r.inserted);
    if (ctx.as_json) {
      json arcs = json::array();
      for (const auto& [s, d] : inserted) arcs.push_back({s, d});
      ctx.out << json{{"inserted", arcs},
                      {"num_inserted", inserted.size()},
                      {"collapsed_subtrees", r.collapsed_subtrees},
                      {"graph", graph_json(r.completed_graph)},
                      {"tree", io::serialize_tree(r.explaining_tree)}}
                     .dump(2)
              << '\n';
    } else {
      ctx.out << "# inserted " << inserted.size() << '\n';
      for (const auto& [s, d] : inserted) ctx.out << "+ " << s << ' ' << d << '\n';
      ctx.out << "# completed graph\n" << io::serialize_graph(r.completed_graph);
      ctx.out << "# collapsed tree\n" << io::serialize_tree(r.explaining_tree) << '\n';
    }
  } catch (const NotA2BmgError& e) {
    return report_not_2bmg(ctx, g, e);
  }
  return kOk;
}

int cmd_oracle_count(const Context& ctx, std::size_t n) {
  const std::size_t generated = oracle::shapes(n).size();
  const std::uint64_t expected = oracle::count_trees(n);
  if (ctx.as_json)
    ctx.out << json{{"leaves", n}, {"generated", generated}, {"closed_form", expected}}.dump(2)
            << '\n';
  else
    ctx.out << "leaves " << n << " generated " << generated << " closed-form " << expected << '\n';
  return generated == expected ? kOk : kInputError;
}

int cmd_oracle_is_bmg(const Context& ctx, const std::string& path) {
  const ColoredDigraph g = io::parse_graph(read_input(ctx, path));
  const auto tree = oracle::oracle_is_bmg(g);
  if (ctx.as_json) {
    json j = {{"is_bmg", tree.has_value()}};
    if (tree) j["tree"] = io::serialize_tree(*tree);
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << (tree ? io::serialize_tree(*tree) : std::string("not a BMG")) << '\n';
  }
  return tree ? kOk : kNotA2Bmg;
}

int cmd_oracle_min_completion(const Context& ctx, const std::string& path, bool any_bmg) {
  const ColoredDigraph g = io::parse_graph(read_input(ctx, path));
  const auto minima = oracle::oracle_min_completion(g, !any_bmg);
  if (ctx.as_json) {
    json sets = json::array();
    for (const ArcSet& f : minima) {
      json arcs = json::array();
      for (const auto& [s, d] : named_arcs(g, f)) arcs.push_back({s, d});
      sets.push_back(arcs);
    }
    ctx.out << json{{"minimum_size", minima.empty() ? json(nullptr) : json(minima.front().size())},
                    {"minima", sets}}
                   .dump(2)
            << '\n';
    return kOk;
  }
  if (minima.empty()) {
    ctx.out << "no completion\n";
    return kOk;
  }
  ctx.out << "# minimum size " << minima.front().size() << ", " << minima.size()
          << " optimal set(s)\n";
  for (std::size_t i = 0; i < minima.size(); ++i) {
    ctx.out << "# set " << i + 1 << '\n';
    for (const auto& [s, d] : named_arcs(g, minima[i])) ctx.out << "+ " << s << ' ' << d << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Best match graphs: construction, least resolved trees, recognition and "
               "binary-explainable completion",
               "bmg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string path;
  auto* from_tree = app.add_subcommand("from-tree", "Emit the BMG of a colored Newick tree");
  from_tree->add_option("input", path, "Tree file or - for stdin")->required();
  auto* lrt = app.add_subcommand("lrt", "Least resolved tree of a tree or a 2-BMG");
  lrt->add_option("input", path, "Tree or graph file")->required();
  auto* recognize = app.add_subcommand("recognize", "Decide whether a 2-colored graph is a BMG");
  recognize->add_option("input", path, "Graph file")->required();
  auto* check_be = app.add_subcommand("check-be", "Test binary-explainability of a graph or tree");
  check_be->add_option("input", path, "Graph or tree file")->required();
  auto* complete = app.add_subcommand(
      "complete", "Minimum arc completion of a 2-BMG to a binary-explainable BMG");
  complete->add_option("input", path, "Graph file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  std::size_t leaves = 0;
  bool any_bmg = false;
  auto* o_count = oracle_cmd->add_subcommand("count-trees", "Count phylogenetic trees on n leaves");
  o_count->add_option("n", leaves, "Number of leaves")->required();
  auto* o_is_bmg = oracle_cmd->add_subcommand("is-bmg", "Search all trees for an explanation");
  o_is_bmg->add_option("input", path, "Graph file")->required();
  auto* o_min = oracle_cmd->add_subcommand("min-completion", "All minimum completions");
  o_min->add_option("input", path, "Graph file")->required();
  o_min->add_flag("--any", any_bmg, "Complete to any BMG instead of a binary-explainable one");
  auto* o_lrt = oracle_cmd->add_subcommand("lrt", "Least resolved tree by subset search");
  o_lrt->add_option("input", path, "Tree file")->required();

  std::vector<const char*> argv{"bmg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInputError;
  }

  Context ctx{in, out, err, format == "json"};
  try {
    if (*from_tree) return cmd_from_tree(ctx, path);
    if (*lrt) return cmd_lrt(ctx, path);
    if (*recognize) return cmd_recognize(ctx, path);
    if (*check_be) return cmd_check_be(ctx, path);
    if (*complete) return cmd_complete(ctx, path);
    if (*o_count) return cmd_oracle_count(ctx, leaves);
    if (*o_is_bmg) return cmd_oracle_is_bmg(ctx, path);
    if (*o_min) return cmd_oracle_min_completion(ctx, path, any_bmg);
    if (*o_lrt) {
      emit_tree(ctx, oracle::oracle_lrt(io::parse_tree(read_input(ctx, path))));
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bmg::cli
