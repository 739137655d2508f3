#include "oegraph/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "oegraph/errors.hpp"
#include "oegraph/graph_io.hpp"
#include "oegraph/groupoid.hpp"
#include "oegraph/report.hpp"

namespace oegraph {

namespace {

using nlohmann::json;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << content;
  if (!f) throw IoError("write failed for '" + path + "'");
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string joined(const std::vector<std::string>& items) {
  if (items.empty()) return "(none)";
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += " ";
    out += s;
  }
  return out;
}

// Options shared by every subcommand.
struct Common {
  std::string format = "text";
  std::string out_path;
  std::ostream* out = nullptr;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out_path,
                  "Write the command's main artifact here (the rewritten graph for move "
                  "subcommands, the report otherwise) instead of stdout");
}

// Sends the rendered report to stdout or, for non-move subcommands that pass
// redirect = true, to --out when given.
void emit(const Common& c, const Report& rep, const std::string& text, bool redirect) {
  const std::string body = c.format == "structured" ? rep.dump() : text;
  if (redirect && !c.out_path.empty())
    write_file(c.out_path, body);
  else
    *c.out << body;
}

std::string move_text(const std::string& header, const Graph& g) {
  std::ostringstream t;
  t << header << "graph:\n" << serialize_graph(g);
  return t.str();
}

// ---- analyze ---------------------------------------------------------

struct AnalyzeOpts {
  Common common;
  std::string path;
  std::size_t depth = 4;
  std::size_t groupoid_depth = 0;
  std::string dot_path;
};

// The depth-d cylinder atoms: one cylinder per path of length d, plus one per
// shorter path that dies in a sink.  These partition the boundary.
std::vector<CylinderSet> depth_atoms(const Graph& g, std::size_t depth) {
  std::vector<CylinderSet> out;
  std::vector<Path> frontier;
  for (const auto& v : g.vertices()) frontier.push_back(Path::at_vertex(g, v));
  for (std::size_t len = 0; len < depth; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      if (g.is_sink(p.range())) {
        out.push_back(CylinderSet::of(g, p));
        continue;
      }
      for (const auto& e : g.out_edges(p.range()))
        next.push_back(p.concat(g, Path::of_edges(g, {e})));
    }
    frontier = std::move(next);
  }
  for (const auto& p : frontier) out.push_back(CylinderSet::of(g, p));
  return out;
}

int run_analyze(const AnalyzeOpts& o) {
  Graph g = load_graph(o.path);
  const auto classes = classify_vertices(g);
  const bool cond_l = satisfies_condition_L(g);
  const auto cycle_data = no_exit_cycle_data(g);
  const bool countable = has_countable_boundary(g);
  const auto cycles = vertex_simple_cycles(g);
  const auto points = enumerate_boundary(g, o.depth);
  const auto partition =
      cylinders_partition_boundary(g, depth_atoms(g, o.depth), o.depth + 1);

  Report rep;
  rep.command = "analyze";
  rep.inputs = {{o.path, graph_digest(g)}};
  rep.status = "ok";

  json res;
  res["vertices"] = g.vertices();
  std::vector<std::string> edge_names;
  for (const auto& e : g.edges()) edge_names.push_back(e.name);
  res["edges"] = edge_names;
  res["regular-vertices"] = classes.regular;
  res["sinks"] = classes.sinks;
  res["condition-L"] = cond_l;
  res["cycle-vertices"] = cycle_data.cycle_vertices;
  if (cycle_data.loops) res["cycle-loops"] = *cycle_data.loops;
  if (cycle_data.non_loop_witness)
    res["non-loop-cycle"] = encode_cycle(*cycle_data.non_loop_witness);
  res["countable-boundary"] = countable;

  json jcycles = json::array();
  for (const auto& c : cycles) jcycles.push_back(encode_cycle(c));
  res["vertex-simple-cycles"] = jcycles;

  json jreturns;
  for (const auto& v : g.vertices()) jreturns[v] = return_paths_at(g, v).size();
  res["return-path-counts"] = jreturns;

  std::ostringstream t;
  t << "graph: " << o.path << "\n";
  t << "digest: " << graph_digest(g) << "\n";
  t << "vertices: " << g.vertices().size() << " (regular: " << joined(classes.regular)
    << "; sinks: " << joined(classes.sinks) << ")\n";
  t << "edges: " << g.edges().size() << "\n";
  t << "condition-L: " << (cond_l ? "true" : "false") << "\n";
  t << "cycle-vertices: " << joined(cycle_data.cycle_vertices) << "\n";
  if (cycle_data.loops) {
    std::vector<std::string> ls;
    for (const auto& [v, e] : *cycle_data.loops) ls.push_back(v + "=" + e);
    t << "cycle-loops: " << joined(ls) << "\n";
  }
  if (cycle_data.non_loop_witness)
    t << "non-loop-cycle: " << cycle_data.non_loop_witness->base() << ": "
      << joined(cycle_data.non_loop_witness->edges()) << "\n";
  t << "countable-boundary: " << (countable ? "true" : "false") << "\n";
  t << "vertex-simple-cycles: " << cycles.size() << "\n";
  for (const auto& c : cycles) t << "  " << c.base() << ": " << joined(c.edges()) << "\n";
  t << "return-path-counts:";
  for (const auto& v : g.vertices()) t << " " << v << "=" << return_paths_at(g, v).size();
  t << "\n";

  json jpoints = json::array();
  t << "boundary (depth " << o.depth << "): " << points.size() << " points\n";
  for (const auto& p : points) {
    json jp;
    jp["point"] = encode_point(p);
    jp["display"] = to_string(p);
    const auto isolated = is_isolated(g, p);
    std::string cls = "unresolved";
    if (p.exact()) cls = to_string(classify_point(g, p));
    jp["class"] = cls;
    if (isolated) jp["isolated"] = *isolated;
    jpoints.push_back(jp);
    t << "  " << to_string(p) << "  [" << cls;
    if (isolated) t << (*isolated ? ", isolated" : ", not isolated");
    t << "]\n";
  }
  res["boundary-depth"] = o.depth;
  res["boundary-points"] = jpoints;

  res["cylinder-partition"] = {{"covers", partition.covers},
                               {"disjoint", partition.disjoint},
                               {"issues", partition.issues}};
  t << "cylinder-partition (depth " << o.depth
    << "): " << (partition.covers && partition.disjoint ? "ok" : "BROKEN") << "\n";
  for (const auto& issue : partition.issues) t << "  " << issue << "\n";

  if (o.groupoid_depth > 0) {
    const auto elems = enumerate_elements(g, o.groupoid_depth);
    std::size_t units = 0;
    for (const auto& e : elems)
      if (e.is_unit()) ++units;
    std::size_t composable = 0;
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (a.y() == b.x()) {
          compose(g, a, b);
          ++composable;
        }
    std::size_t tail_pairs = 0;
    for (const auto& x : points) {
      if (!x.exact()) continue;
      for (const auto& y : points) {
        if (!y.exact()) continue;
        if (tail_equivalence(g, x, y, o.groupoid_depth)) ++tail_pairs;
      }
    }
    res["groupoid"] = {{"depth", o.groupoid_depth},
                       {"elements", elems.size()},
                       {"units", units},
                       {"composable-pairs", composable},
                       {"tail-equivalent-point-pairs", tail_pairs}};
    t << "groupoid (depth " << o.groupoid_depth << "): " << elems.size() << " elements, "
      << units << " units, " << composable << " composable pairs, " << tail_pairs
      << " tail-equivalent point pairs\n";
  }

  rep.result = res;
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(g, o.path));
  emit(o.common, rep, t.str(), true);
  return 0;
}

// ---- moves -----------------------------------------------------------

struct MoveOpts {
  Common common;
  std::string path;
  std::string map_out;
  std::vector<std::string> at;     // plug
  std::vector<std::string> paths;  // sink-swap, comma-separated edge lists
};

json graph_payload(const Graph& g) {
  return {{"digest", graph_digest(g)}, {"text", serialize_graph(g)}};
}

int finish_move(const MoveOpts& o, const std::string& command, const Graph& input,
                const MoveResult& res, json extra, const std::string& extra_text) {
  Report rep;
  rep.command = command;
  rep.inputs = {{o.path, graph_digest(input)}};
  rep.status = "ok";
  extra["graph"] = graph_payload(res.graph);
  if (res.map) extra["map"] = encode_map(*res.map);
  rep.result = extra;

  if (!o.common.out_path.empty()) write_file(o.common.out_path, serialize_graph(res.graph));
  if (!o.map_out.empty()) {
    if (!res.map) throw IoError("this move carries no boundary map to write");
    write_file(o.map_out, encode_map(*res.map).dump(2) + "\n");
  }
  emit(o.common, rep, extra_text + move_text("", res.graph), false);
  return 0;
}

int run_unplug(const MoveOpts& o) {
  Graph g = load_graph(o.path);
  MoveResult res = unplug(g);
  json extra;
  extra["cycle-vertices"] = res.cycle_vertices;
  extra["removed-edges"] = res.removed_edges;
  std::ostringstream t;
  t << "cycle-vertices: " << joined(res.cycle_vertices) << "\n";
  t << "removed-edges: " << joined(res.removed_edges) << "\n";
  return finish_move(o, "unplug", g, res, extra, t.str());
}

int run_plug(const MoveOpts& o) {
  Graph g = load_graph(o.path);
  MoveResult res = plug(g, o.at);
  json extra;
  extra["added-edges"] = res.added_edges;
  std::ostringstream t;
  t << "added-edges: " << joined(res.added_edges) << "\n";
  return finish_move(o, "plug", g, res, extra, t.str());
}

int run_canonicalize(const MoveOpts& o) {
  Graph g = load_graph(o.path);
  MoveResult res = canonicalize(g);
  json extra;
  json reps = json::array();
  for (const auto& c : res.cycle_representatives) reps.push_back(encode_cycle(c));
  extra["cycle-classes"] = reps;
  extra["cycle-vertices"] = res.cycle_vertices;
  extra["removed-edges"] = res.removed_edges;
  extra["added-edges"] = res.added_edges;
  std::ostringstream t;
  t << "cycle-classes: " << res.cycle_representatives.size() << "\n";
  for (const auto& c : res.cycle_representatives)
    t << "  " << c.base() << ": " << joined(c.edges()) << "\n";
  t << "cycle-vertices: " << joined(res.cycle_vertices) << "\n";
  t << "removed-edges: " << joined(res.removed_edges) << "\n";
  t << "added-edges: " << joined(res.added_edges) << "\n";
  return finish_move(o, "canonicalize", g, res, extra, t.str());
}

int run_sink_swap(const MoveOpts& o) {
  Graph g = load_graph(o.path);
  std::vector<Path> paths;
  for (const auto& arg : o.paths) {
    std::vector<EdgeId> edges;
    std::string cur;
    for (char c : arg + ",") {
      if (c == ',') {
        if (!cur.empty()) edges.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (edges.empty()) throw IoError("empty --path value");
    paths.push_back(Path::of_edges(g, std::move(edges)));
  }
  MoveResult res = sink_swap(g, paths);
  json extra;
  json jpaths = json::array();
  for (const auto& p : res.swapped_paths) jpaths.push_back(p.edges());
  extra["swapped-paths"] = jpaths;
  std::ostringstream t;
  t << "swapped-paths: " << res.swapped_paths.size() << "\n";
  for (const auto& p : res.swapped_paths)
    t << "  " << joined(p.edges()) << " -> " << p.range() << "\n";
  return finish_move(o, "sink-swap", g, res, extra, t.str());
}

// ---- verify-oe -------------------------------------------------------

struct VerifyOpts {
  Common common;
  std::string source_path, target_path, map_path;
  VerifyConfig config;
  bool normalize = false;
};

int run_verify(const VerifyOpts& o) {
  Graph source = load_graph(o.source_path);
  Graph target = load_graph(o.target_path);
  OrbitMap map = decode_map(read_json(o.map_path), source, target);
  VerificationReport vr = verify(source, target, map, o.config);

  Report rep;
  rep.command = "verify-oe";
  rep.inputs = {{o.source_path, graph_digest(source)},
                {o.target_path, graph_digest(target)},
                {o.map_path, digest(read_json(o.map_path).dump())}};
  rep.status = vr.pass() ? "pass" : "fail";
  json res;
  res["verification"] = encode_verification(vr);

  std::ostringstream t;
  t << "verify-oe: " << (vr.pass() ? "PASS" : "FAIL") << " (depth " << vr.depth
    << ", exponent bound " << vr.exponent_bound << ")\n";
  t << "points-checked: " << vr.points_checked << "\n";
  t << "bijective: " << (vr.bijective ? "true" : "false") << "\n";
  t << "forward-exponents: " << (vr.forward_exponents_ok ? "ok" : "failed") << "\n";
  t << "backward-exponents: " << (vr.backward_exponents_ok ? "ok" : "failed") << "\n";
  t << "continuity: " << (vr.continuity_ok ? "ok" : "failed") << "\n";
  if (vr.periodic_points_preserved)
    t << "periodic-points-preserved: " << (*vr.periodic_points_preserved ? "true" : "false")
      << "\n";
  if (vr.periodic_witness) t << "periodic-witness: " << to_string(*vr.periodic_witness) << "\n";
  if (!vr.failure.empty()) t << "failure: " << vr.failure << "\n";
  if (vr.counterexample) t << "counterexample: " << to_string(*vr.counterexample) << "\n";

  if (o.normalize) {
    NormalizeResult nr = normalize_orbit_equivalence(source, target, map, o.config);
    json jn;
    jn["ok"] = nr.ok;
    if (!nr.error.empty()) jn["error"] = nr.error;
    jn["moved-vertices"] = nr.moved_vertices;
    json jpaths = json::array();
    for (const auto& p : nr.swap_paths) jpaths.push_back(p.edges());
    jn["swap-paths"] = jpaths;
    jn["cycle-vertices-correspond"] = nr.cycle_vertices_correspond;
    if (nr.gamma) jn["gamma"] = encode_map(*nr.gamma);
    if (nr.lambda) jn["lambda"] = encode_map(*nr.lambda);
    res["normalize"] = jn;
    t << "normalize: " << (nr.ok ? "ok" : "rejected") << "\n";
    if (!nr.error.empty()) t << "  " << nr.error << "\n";
    if (nr.ok) {
      t << "  moved-vertices: " << joined(nr.moved_vertices) << "\n";
      t << "  cycle-vertices-correspond: "
        << (nr.cycle_vertices_correspond ? "true" : "false") << "\n";
    }
  }

  rep.result = res;
  emit(o.common, rep, t.str(), true);
  return vr.pass() ? 0 : 1;
}

// ---- invariants / compare --------------------------------------------

json encode_adjacency(const Graph& g) {
  const CountMatrix cm = adjacency_matrix(g);
  json rows = json::array();
  for (const auto& row : cm.at) rows.push_back(row);
  return {{"order", cm.order}, {"counts", rows}};
}

json invariant_payload(const Graph& g) {
  json j;
  j["adjacency"] = encode_adjacency(g);
  j["irreducible"] = is_irreducible(g);
  j["trivial-cycle"] = is_trivial_cycle(g);
  j["bowen-franks"] = encode_bowen_franks(bowen_franks(g));
  IntMatrix base =
      IntMatrix::identity(g.vertices().size()) - IntMatrix::from_counts(adjacency_matrix(g)).transposed();
  json diag = json::array();
  for (const auto& d : smith_normal_form(base).diagonal()) diag.push_back(d.str());
  j["smith-diagonal"] = diag;
  return j;
}

std::string invariant_text(const Graph& g) {
  std::ostringstream t;
  const BowenFranksData bf = bowen_franks(g);
  t << "irreducible: " << (is_irreducible(g) ? "true" : "false") << "\n";
  t << "trivial-cycle: " << (is_trivial_cycle(g) ? "true" : "false") << "\n";
  t << "bowen-franks: " << to_string(bf) << "\n";
  IntMatrix base =
      IntMatrix::identity(g.vertices().size()) - IntMatrix::from_counts(adjacency_matrix(g)).transposed();
  t << "smith-diagonal:";
  for (const auto& d : smith_normal_form(base).diagonal()) t << " " << d.str();
  t << "\n";
  return t.str();
}

struct TwoGraphOpts {
  Common common;
  std::string path, path_b;
};

int run_invariants(const TwoGraphOpts& o) {
  Graph g = load_graph(o.path);
  Report rep;
  rep.command = "invariants";
  rep.inputs = {{o.path, graph_digest(g)}};
  rep.status = "ok";
  rep.result = invariant_payload(g);
  std::ostringstream t;
  t << "graph: " << o.path << "\n" << invariant_text(g);
  emit(o.common, rep, t.str(), true);
  return 0;
}

int run_compare(const TwoGraphOpts& o) {
  Graph a = load_graph(o.path);
  Graph b = load_graph(o.path_b);
  const FranksVerdict verdict = franks_compare(a, b);
  const IsomorphismResult iso = find_isomorphism(a, b);

  Report rep;
  rep.command = "compare";
  rep.inputs = {{o.path, graph_digest(a)}, {o.path_b, graph_digest(b)}};
  rep.status = to_string(verdict);
  json res;
  res["verdict"] = to_string(verdict);
  res["first"] = invariant_payload(a);
  res["second"] = invariant_payload(b);
  switch (iso.status) {
    case IsomorphismResult::Status::Found:
      res["isomorphic"] = true;
      res["vertex-map"] = iso.vertex_map;
      res["edge-map"] = iso.edge_map;
      break;
    case IsomorphismResult::Status::None:
      res["isomorphic"] = false;
      break;
    case IsomorphismResult::Status::TooLarge:
      break;
  }
  rep.result = res;

  std::ostringstream t;
  t << "verdict: " << to_string(verdict) << "\n";
  t << "first: " << o.path << "\n" << invariant_text(a);
  t << "second: " << o.path_b << "\n" << invariant_text(b);
  if (iso.status != IsomorphismResult::Status::TooLarge)
    t << "isomorphic: " << (iso.status == IsomorphismResult::Status::Found ? "true" : "false")
      << "\n";
  emit(o.common, rep, t.str(), true);
  return verdict == FranksVerdict::NotEquivalent ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary path spaces of finite directed graphs: moves, orbit equivalence "
               "verification, and flow invariants"};
  app.require_subcommand(1);

  AnalyzeOpts az;
  auto* analyze = app.add_subcommand(
      "analyze", "Vertex classes, cycle structure, countability and a boundary sample");
  analyze->add_option("graph", az.path, "Graph file")->required();
  analyze->add_option("--depth", az.depth, "Boundary enumeration depth")->capture_default_str();
  analyze->add_option("--groupoid-depth", az.groupoid_depth,
                      "Also summarize the groupoid at this depth (0 = skip)");
  analyze->add_option("--dot", az.dot_path, "Write a DOT rendering here");
  add_common(analyze, az.common);

  MoveOpts up;
  auto* unplug_cmd =
      app.add_subcommand("unplug", "Remove exit-free loops, turning their vertices into sinks");
  unplug_cmd->add_option("graph", up.path, "Graph file")->required();
  unplug_cmd->add_option("--map-out", up.map_out, "Write the attached boundary map here");
  add_common(unplug_cmd, up.common);

  MoveOpts pl;
  auto* plug_cmd = app.add_subcommand("plug", "Add a fresh loop at each listed sink");
  plug_cmd->add_option("graph", pl.path, "Graph file")->required();
  plug_cmd->add_option("--at", pl.at, "Sink to receive a loop (repeatable)")->required();
  add_common(plug_cmd, pl.common);

  MoveOpts cz;
  auto* canon_cmd =
      app.add_subcommand("canonicalize", "Replace every exit-free cycle by a loop at its base");
  canon_cmd->add_option("graph", cz.path, "Graph file")->required();
  add_common(canon_cmd, cz.common);

  MoveOpts sw;
  auto* swap_cmd =
      app.add_subcommand("sink-swap", "Exchange chosen paths with the sinks they end in");
  swap_cmd->add_option("graph", sw.path, "Graph file")->required();
  swap_cmd
      ->add_option("--path", sw.paths,
                   "Comma-separated edge list of a path into a sink (repeatable)")
      ->required();
  swap_cmd->add_option("--map-out", sw.map_out, "Write the attached boundary map here");
  add_common(swap_cmd, sw.common);

  VerifyOpts vf;
  auto* verify_cmd = app.add_subcommand(
      "verify-oe", "Check a candidate orbit equivalence between two boundary spaces");
  verify_cmd->add_option("source", vf.source_path, "Source graph file")->required();
  verify_cmd->add_option("target", vf.target_path, "Target graph file")->required();
  verify_cmd->add_option("map", vf.map_path, "Map file (JSON)")->required();
  verify_cmd->add_option("--depth", vf.config.depth, "Enumeration depth")->capture_default_str();
  verify_cmd->add_option("--exponent-bound", vf.config.exponent_bound, "Shift exponent bound")
      ->capture_default_str();
  verify_cmd->add_flag("--normalize", vf.normalize,
                       "Also move the equivalence down to the unplugged graphs and match "
                       "cycle vertices");
  add_common(verify_cmd, vf.common);

  TwoGraphOpts iv;
  auto* inv_cmd = app.add_subcommand("invariants", "Bowen-Franks data of one graph");
  inv_cmd->add_option("graph", iv.path, "Graph file")->required();
  add_common(inv_cmd, iv.common);

  TwoGraphOpts cp;
  auto* cmp_cmd =
      app.add_subcommand("compare", "Compare two graphs by their flow invariants");
  cmp_cmd->add_option("first", cp.path, "First graph file")->required();
  cmp_cmd->add_option("second", cp.path_b, "Second graph file")->required();
  add_common(cmp_cmd, cp.common);

  az.common.out = up.common.out = pl.common.out = cz.common.out = sw.common.out =
      vf.common.out = iv.common.out = cp.common.out = &out;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(az);
    if (unplug_cmd->parsed()) return run_unplug(up);
    if (plug_cmd->parsed()) return run_plug(pl);
    if (canon_cmd->parsed()) return run_canonicalize(cz);
    if (swap_cmd->parsed()) return run_sink_swap(sw);
    if (verify_cmd->parsed()) return run_verify(vf);
    if (inv_cmd->parsed()) return run_invariants(iv);
    if (cmp_cmd->parsed()) return run_compare(cp);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace oegraph
