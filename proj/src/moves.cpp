#include "oegraph/moves.hpp"

#include <algorithm>

namespace oegraph {

namespace {

EdgeId fresh_edge_name(const Graph& g, const std::string& base) {
  if (!g.has_edge(base)) return base;
  for (int i = 2;; ++i) {
    EdgeId candidate = base + "_" + std::to_string(i);
    if (!g.has_edge(candidate)) return candidate;
  }
}

CocycleFn constant_fn(long value) {
  CocycleCase c;
  c.formula = CocycleCase::Formula::Constant;
  c.value = value;
  return {c};
}

}  // namespace

MoveResult unplug(const Graph& g) {
  NoExitCycleData data = no_exit_cycle_data(g);
  if (!data.loops_available()) {
    throw MoveError("exit-free cycle through '" + data.non_loop_witness->base() +
                    "' is not a loop; canonicalize first");
  }
  MoveResult res;
  res.cycle_vertices = data.cycle_vertices;

  GraphParts parts;
  parts.vertices = g.vertices();
  std::set<EdgeId> removed;
  for (const auto& [v, e] : *data.loops) removed.insert(e);
  for (const auto& e : g.edges())
    if (!removed.count(e.name)) parts.edges.push_back(e);
  res.removed_edges.assign(removed.begin(), removed.end());
  res.graph = Graph::from_parts(parts);

  // The attached map goes from the unplugged boundary back into the
  // original one: finite points ending at a former cycle vertex grow the
  // loop tail.  Condition (1) holds with (l, m) = (1, 0) because the map
  // intertwines the shifts; condition (2) needs one extra shift except at
  // the pure loop points themselves.
  DeclaredCocycles cc;
  cc.l = constant_fn(1);
  cc.m = constant_fn(0);
  cc.m_prime = constant_fn(0);
  CocycleCase at_loops;
  at_loops.guard = std::set<BoundaryPoint>{};
  for (const auto& [v, e] : *data.loops) {
    at_loops.guard->insert(BoundaryPoint::eventually_periodic(
        g, Path::at_vertex(g, v), Path::of_edges(g, {e})));
  }
  at_loops.formula = CocycleCase::Formula::Constant;
  at_loops.value = 0;
  CocycleCase otherwise;
  otherwise.formula = CocycleCase::Formula::Constant;
  otherwise.value = 1;
  cc.l_prime = CocycleFn{at_loops, otherwise};

  res.map = OrbitMap(res.graph, g, {RuleAppendLoopTail{*data.loops}, RuleIdentity{}},
                     std::move(cc));
  return res;
}

MoveResult plug(const Graph& g, const std::vector<VertexId>& at) {
  MoveResult res;
  GraphParts parts;
  parts.vertices = g.vertices();
  for (const auto& e : g.edges()) parts.edges.push_back(e);
  std::set<VertexId> seen;
  for (const auto& v : at) {
    if (!g.has_vertex(v)) throw MoveError("cannot plug unknown vertex '" + v + "'");
    if (!g.is_sink(v)) throw MoveError("cannot plug '" + v + "': it is not a sink");
    if (!seen.insert(v).second) throw MoveError("vertex '" + v + "' listed twice");
    EdgeId name = fresh_edge_name(g, "plug_" + v);
    parts.edges.push_back({name, v, v});
    res.added_edges.push_back(name);
  }
  res.cycle_vertices.assign(seen.begin(), seen.end());
  res.graph = Graph::from_parts(parts);
  return res;
}

MoveResult canonicalize(const Graph& g) {
  MoveResult res;

  // Group the exit-free vertex-simple cycles by vertex support; keep the
  // rotation based at the least vertex of each class.
  std::map<std::set<VertexId>, Cycle> classes;
  for (const auto& c : vertex_simple_cycles(g)) {
    if (cycle_has_exit(g, c)) continue;
    std::set<VertexId> support;
    for (const auto& name : c.edges()) support.insert(g.edge(name).src);
    if (c.base() != *support.begin()) continue;  // not the chosen rotation
    classes.emplace(std::move(support), c);
  }

  GraphParts parts;
  parts.vertices = g.vertices();
  std::set<EdgeId> replaced;
  std::vector<Cycle> rewrite;
  for (const auto& [support, rep] : classes) {
    res.cycle_representatives.push_back(rep);
    res.cycle_vertices.insert(res.cycle_vertices.end(), support.begin(), support.end());
    if (rep.edges().size() == 1) continue;  // already a loop, leave it alone
    replaced.insert(rep.edges().front());
    rewrite.push_back(rep);
  }
  std::sort(res.cycle_vertices.begin(), res.cycle_vertices.end());
  for (const auto& e : g.edges())
    if (!replaced.count(e.name)) parts.edges.push_back(e);
  res.removed_edges.assign(replaced.begin(), replaced.end());
  Graph trimmed = Graph::from_parts(parts);
  for (const auto& rep : rewrite) {
    EdgeId name = fresh_edge_name(trimmed, "cyc_" + rep.base());
    parts.edges.push_back({name, rep.base(), rep.base()});
    trimmed = Graph::from_parts(parts);
    res.added_edges.push_back(name);
  }
  res.graph = std::move(trimmed);
  return res;
}

MoveResult sink_swap(const Graph& g, const std::vector<Path>& paths) {
  std::set<VertexId> ranges;
  for (const auto& mu : paths) {
    if (mu.length() == 0) throw MoveError("swap paths must have length at least 1");
    if (!g.is_sink(mu.range()))
      throw MoveError("swap path ends at '" + mu.range() + "', which is not a sink");
    if (!ranges.insert(mu.range()).second)
      throw MoveError("two swap paths end at the sink '" + mu.range() + "'");
  }
  // The swapped points are finitely many isolated points, hence a closed
  // subset of the boundary; no accumulation check is needed.

  MoveResult res;
  res.graph = g;
  res.swapped_paths = paths;
  std::sort(res.swapped_paths.begin(), res.swapped_paths.end());

  RuleFiniteTable table;
  std::set<BoundaryPoint> f_points, f_long;
  std::map<VertexId, std::size_t> swap_length;  // r(mu) -> |mu|
  for (const auto& mu : res.swapped_paths) {
    BoundaryPoint p = BoundaryPoint::finite(g, mu);
    BoundaryPoint v = BoundaryPoint::at_vertex(g, mu.range());
    table.entries.emplace_back(p, v);
    table.entries.emplace_back(v, p);
    f_points.insert(p);
    if (mu.length() >= 2) f_long.insert(p);
    swap_length[mu.range()] = mu.length();
  }

  // Exponents that witness the exchange.  l: 0 on F, the full length one step
  // before F, 1 elsewhere.  m: the swapped path's length on single edges
  // into a swapped sink, length - 1 on the longer members of F, 0 elsewhere.
  std::set<BoundaryPoint> pre_f;
  for (const auto& mu : res.swapped_paths) {
    for (const auto& name : g.in_edges(mu.source())) {
      Path e = Path::of_edges(g, {name});
      pre_f.insert(BoundaryPoint::finite(g, e.concat(g, mu)));
    }
  }
  std::map<BoundaryPoint, std::size_t> into_swapped;
  for (const auto& e : g.edges()) {
    auto it = swap_length.find(e.dst);
    if (it != swap_length.end())
      into_swapped[BoundaryPoint::finite(g, Path::of_edges(g, {e.name}))] = it->second;
  }

  CocycleCase l_on_f;
  l_on_f.guard = f_points;
  l_on_f.formula = CocycleCase::Formula::Constant;
  l_on_f.value = 0;
  CocycleCase l_before_f;
  l_before_f.guard = pre_f;
  l_before_f.formula = CocycleCase::Formula::LengthPlus;
  l_before_f.value = 0;
  CocycleCase l_else;
  l_else.formula = CocycleCase::Formula::Constant;
  l_else.value = 1;

  CocycleCase m_into;
  m_into.guard = std::set<BoundaryPoint>{};
  for (const auto& [p, len] : into_swapped) m_into.guard->insert(p);
  m_into.formula = CocycleCase::Formula::Table;
  m_into.table = into_swapped;
  CocycleCase m_long;
  m_long.guard = f_long;
  m_long.formula = CocycleCase::Formula::LengthPlus;
  m_long.value = -1;
  CocycleCase m_else;
  m_else.formula = CocycleCase::Formula::Constant;
  m_else.value = 0;

  DeclaredCocycles cc;
  cc.l = CocycleFn{l_on_f, l_before_f, l_else};
  cc.m = CocycleFn{m_into, m_long, m_else};
  cc.l_prime = cc.l;  // the map is an involution
  cc.m_prime = cc.m;

  res.map = OrbitMap(g, g, {std::move(table), RuleIdentity{}}, std::move(cc));
  return res;
}

NormalizeResult normalize_orbit_equivalence(const Graph& E, const Graph& F,
                                            const OrbitMap& beta, const VerifyConfig& config) {
  NormalizeResult res;
  if (!(beta.source() == E) || !(beta.target() == F))
    throw MapError("beta is not a map between the two given graphs");

  MoveResult uE = unplug(E);
  MoveResult uF = unplug(F);

  res.beta_report = verify(beta, config);
  if (!res.beta_report.pass()) {
    res.error = "beta fails verification: " + res.beta_report.failure;
    res.counterexample = res.beta_report.counterexample;
    return res;
  }
  if (!res.beta_report.periodic_points_preserved.value_or(false)) {
    res.error = "beta does not preserve eventually periodic isolated points";
    res.counterexample = res.beta_report.periodic_witness;
    return res;
  }

  OrbitMap lambda = compose_maps(invert_map(*uF.map), compose_maps(beta, *uE.map));

  // V: cycle vertices of E whose image under lambda has positive length;
  // their images form the swap set on the other side.
  std::vector<Path> swap_paths;
  for (const auto& v : uE.cycle_vertices) {
    BoundaryPoint image = apply_map(lambda, BoundaryPoint::at_vertex(uE.graph, v));
    if (image.kind() != BoundaryPoint::Kind::FiniteToSink) {
      res.error = "lambda sends the cycle vertex '" + v + "' to the infinite point " +
                  to_string(image);
      res.counterexample = image;
      return res;
    }
    if (image.prefix().length() >= 1) {
      res.moved_vertices.push_back(v);
      swap_paths.push_back(image.prefix());
    }
  }
  res.swap_paths = swap_paths;

  MoveResult swap;
  try {
    swap = sink_swap(uF.graph, swap_paths);
  } catch (const MoveError& err) {
    res.error = std::string("the images of the cycle vertices admit no sink swap: ") + err.what();
    return res;
  }

  OrbitMap gamma = compose_maps(*swap.map, lambda);

  // gamma must carry the cycle vertices of E onto those of F.
  std::set<VertexId> hit;
  bool ok = true;
  for (const auto& v : uE.cycle_vertices) {
    BoundaryPoint image = apply_map(gamma, BoundaryPoint::at_vertex(uE.graph, v));
    if (image.kind() != BoundaryPoint::Kind::FiniteToSink || image.prefix().length() != 0) {
      ok = false;
      res.counterexample = image;
      break;
    }
    hit.insert(image.prefix().range());
  }
  std::set<VertexId> expected(uF.cycle_vertices.begin(), uF.cycle_vertices.end());
  res.cycle_vertices_correspond = ok && hit == expected;
  if (!res.cycle_vertices_correspond) {
    res.error = "gamma does not match the cycle vertices of the two graphs";
    res.lambda = std::move(lambda);
    res.gamma = std::move(gamma);
    return res;
  }

  res.ok = true;
  res.lambda = std::move(lambda);
  res.gamma = std::move(gamma);
  return res;
}

}  // namespace oegraph
