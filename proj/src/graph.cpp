#include "oegraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace oegraph {

namespace {

bool contains(const std::vector<VertexId>& sorted, const VertexId& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

std::vector<std::string> validate(const GraphParts& parts) {
  std::vector<std::string> issues;
  if (parts.vertices.empty()) {
    issues.push_back("graph has no vertices");
  }
  std::set<VertexId> vseen;
  for (const auto& v : parts.vertices) {
    if (v.empty()) issues.push_back("empty vertex identifier");
    if (!vseen.insert(v).second) issues.push_back("duplicate vertex '" + v + "'");
  }
  std::set<EdgeId> eseen;
  for (const auto& e : parts.edges) {
    if (e.name.empty()) issues.push_back("empty edge identifier");
    if (!eseen.insert(e.name).second) issues.push_back("duplicate edge '" + e.name + "'");
    if (!vseen.count(e.src))
      issues.push_back("edge '" + e.name + "' leaves unknown vertex '" + e.src + "'");
    if (!vseen.count(e.dst))
      issues.push_back("edge '" + e.name + "' enters unknown vertex '" + e.dst + "'");
  }
  return issues;
}

Graph Graph::from_parts(GraphParts parts) {
  auto issues = validate(parts);
  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "invalid graph:";
    for (const auto& s : issues) msg << " [" << s << "]";
    throw GraphError(msg.str());
  }
  Graph g;
  g.vertices_ = std::move(parts.vertices);
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.edges_ = std::move(parts.edges);
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.name < b.name; });
  for (const auto& v : g.vertices_) {
    g.out_[v];
    g.in_[v];
  }
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.edge_index_[e.name] = i;
    g.out_[e.src].push_back(e.name);
    g.in_[e.dst].push_back(e.name);
  }
  return g;
}

bool Graph::has_vertex(const VertexId& v) const { return contains(vertices_, v); }

bool Graph::has_edge(const EdgeId& e) const { return edge_index_.count(e) > 0; }

const Edge& Graph::edge(const EdgeId& e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) throw GraphError("unknown edge '" + e + "'");
  return edges_[it->second];
}

const std::vector<EdgeId>& Graph::out_edges(const VertexId& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw GraphError("unknown vertex '" + v + "'");
  return it->second;
}

const std::vector<EdgeId>& Graph::in_edges(const VertexId& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) throw GraphError("unknown vertex '" + v + "'");
  return it->second;
}

std::vector<VertexId> Graph::sinks() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (is_sink(v)) out.push_back(v);
  return out;
}

Path Path::at_vertex(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) throw DomainError("path base '" + v + "' is not a vertex");
  Path p;
  p.src_ = v;
  p.dst_ = std::move(v);
  return p;
}

Path Path::of_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw DomainError("edge list of a positive-length path is empty");
  Path p;
  p.src_ = g.edge(edges.front()).src;
  VertexId cur = p.src_;
  for (const auto& name : edges) {
    const Edge& e = g.edge(name);
    if (e.src != cur)
      throw DomainError("edge '" + name + "' does not continue at '" + cur + "'");
    cur = e.dst;
  }
  p.dst_ = cur;
  p.edges_ = std::move(edges);
  return p;
}

Path Path::drop_first(const Graph& g) const {
  if (edges_.empty()) throw DomainError("cannot drop an edge from a length-0 path");
  if (edges_.size() == 1) return at_vertex(g, dst_);
  return of_edges(g, std::vector<EdgeId>(edges_.begin() + 1, edges_.end()));
}

Path Path::drop_last(const Graph& g) const {
  if (edges_.empty()) throw DomainError("cannot drop an edge from a length-0 path");
  if (edges_.size() == 1) return at_vertex(g, src_);
  return of_edges(g, std::vector<EdgeId>(edges_.begin(), edges_.end() - 1));
}

Path Path::concat(const Graph& g, const Path& other) const {
  if (dst_ != other.src_)
    throw DomainError("paths do not compose at '" + dst_ + "' vs '" + other.src_ + "'");
  if (other.empty()) return *this;
  if (empty()) return other;
  std::vector<EdgeId> joined = edges_;
  joined.insert(joined.end(), other.edges_.begin(), other.edges_.end());
  return of_edges(g, std::move(joined));
}

Cycle Cycle::of(const Graph& g, Path path) {
  if (path.length() == 0) throw DomainError("a cycle has length at least 1");
  if (path.source() != path.range())
    throw DomainError("cycle endpoints differ: '" + path.source() + "' vs '" + path.range() + "'");
  Cycle c;
  std::set<VertexId> ranges;
  bool simple = true;
  bool ret = true;
  const auto& seq = path.edges();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const VertexId& r = g.edge(seq[i]).dst;
    if (!ranges.insert(r).second) simple = false;
    if (i + 1 < seq.size() && r == path.source()) ret = false;
  }
  c.path_ = std::move(path);
  c.vertex_simple_ = simple;
  c.return_path_ = ret;
  return c;
}

Cycle canonical_rotation(const Graph& g, const Cycle& c) {
  const auto& seq = c.edges();
  std::vector<EdgeId> best = seq;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    std::vector<EdgeId> rot(seq.begin() + k, seq.end());
    rot.insert(rot.end(), seq.begin(), seq.begin() + k);
    if (rot < best) best = rot;
  }
  return Cycle::of(g, Path::of_edges(g, best));
}

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification out;
  for (const auto& v : g.vertices()) {
    if (g.is_sink(v))
      out.sinks.push_back(v);
    else
      out.regular.push_back(v);
  }
  return out;
}

std::vector<Cycle> vertex_simple_cycles(const Graph& g) {
  std::vector<Cycle> found;
  for (const auto& base : g.vertices()) {
    std::vector<EdgeId> stack;
    std::set<VertexId> ranges;
    std::function<void(const VertexId&)> grow = [&](const VertexId& cur) {
      for (const auto& name : g.out_edges(cur)) {
        const VertexId& w = g.edge(name).dst;
        if (w == base) {
          stack.push_back(name);
          found.push_back(Cycle::of(g, Path::of_edges(g, stack)));
          stack.pop_back();
        } else if (!ranges.count(w)) {
          stack.push_back(name);
          ranges.insert(w);
          grow(w);
          ranges.erase(w);
          stack.pop_back();
        }
      }
    };
    grow(base);
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool cycle_has_exit(const Graph& g, const Cycle& c) {
  for (const auto& name : c.edges()) {
    const VertexId& v = g.edge(name).src;
    for (const auto& other : g.out_edges(v))
      if (other != name) return true;
  }
  return false;
}

bool satisfies_condition_L(const Graph& g) {
  for (const auto& c : vertex_simple_cycles(g))
    if (!cycle_has_exit(g, c)) return false;
  return true;
}

NoExitCycleData no_exit_cycle_data(const Graph& g) {
  NoExitCycleData out;
  std::set<VertexId> verts;
  std::map<VertexId, EdgeId> loops;
  bool all_loops = true;
  for (const auto& c : vertex_simple_cycles(g)) {
    if (cycle_has_exit(g, c)) continue;
    for (const auto& name : c.edges()) verts.insert(g.edge(name).src);
    if (c.is_loop()) {
      loops[c.base()] = c.edges().front();
    } else if (all_loops) {
      all_loops = false;
      out.non_loop_witness = c;
    }
  }
  out.cycle_vertices.assign(verts.begin(), verts.end());
  if (all_loops) out.loops = std::move(loops);
  return out;
}

std::vector<Cycle> return_paths_at(const Graph& g, const VertexId& v,
                                   std::optional<std::size_t> max_length) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex '" + v + "'");
  std::size_t bound = max_length.value_or(g.vertices().size());
  std::vector<Cycle> found;
  std::vector<EdgeId> stack;
  std::function<void(const VertexId&)> grow = [&](const VertexId& cur) {
    if (stack.size() >= bound) return;
    for (const auto& name : g.out_edges(cur)) {
      const VertexId& w = g.edge(name).dst;
      stack.push_back(name);
      if (w == v)
        found.push_back(Cycle::of(g, Path::of_edges(g, stack)));
      else
        grow(w);
      stack.pop_back();
    }
  };
  grow(v);
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

// Tarjan's strongly connected components.
struct SccFinder {
  const Graph& g;
  std::map<VertexId, int> index, low, comp;
  std::vector<VertexId> stack;
  std::set<VertexId> on_stack;
  int next_index = 0;
  int next_comp = 0;

  explicit SccFinder(const Graph& graph) : g(graph) {
    for (const auto& v : g.vertices())
      if (!index.count(v)) visit(v);
  }

  void visit(const VertexId& v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const auto& name : g.out_edges(v)) {
      const VertexId& w = g.edge(name).dst;
      if (!index.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        VertexId w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp[w] = next_comp;
        if (w == v) break;
      }
      ++next_comp;
    }
  }
};

}  // namespace

bool has_countable_boundary(const Graph& g) {
  SccFinder scc(g);
  std::map<int, std::size_t> comp_size, intra_edges;
  for (const auto& v : g.vertices()) ++comp_size[scc.comp.at(v)];
  std::map<VertexId, std::size_t> intra_out;
  for (const auto& e : g.edges()) {
    if (scc.comp.at(e.src) == scc.comp.at(e.dst)) {
      ++intra_edges[scc.comp.at(e.src)];
      ++intra_out[e.src];
    }
  }
  for (const auto& [c, n] : intra_edges) {
    // A component with internal edges must be one simple cycle: as many
    // internal edges as vertices and exactly one internal edge per vertex.
    if (n != comp_size.at(c)) return false;
  }
  for (const auto& [v, n] : intra_out)
    if (n > 1) return false;
  return true;
}

CountMatrix adjacency_matrix(const Graph& g) {
  CountMatrix m;
  m.order = g.vertices();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < m.order.size(); ++i) pos[m.order[i]] = i;
  m.at.assign(m.order.size(), std::vector<std::int64_t>(m.order.size(), 0));
  for (const auto& e : g.edges()) ++m.at[pos[e.src]][pos[e.dst]];
  return m;
}

namespace {

struct DegreeProfile {
  std::size_t out = 0, in = 0, self = 0;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
  friend bool operator<(const DegreeProfile& a, const DegreeProfile& b) {
    return std::tie(a.out, a.in, a.self) < std::tie(b.out, b.in, b.self);
  }
};

DegreeProfile profile_of(const Graph& g, const VertexId& v) {
  DegreeProfile p{g.out_degree(v), g.in_degree(v), 0};
  for (const auto& name : g.out_edges(v))
    if (g.edge(name).dst == v) ++p.self;
  return p;
}

}  // namespace

IsomorphismResult find_isomorphism(const Graph& a, const Graph& b, std::size_t max_vertices) {
  IsomorphismResult res;
  if (a.vertices().size() > max_vertices || b.vertices().size() > max_vertices) {
    res.status = IsomorphismResult::Status::TooLarge;
    return res;
  }
  if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
    return res;

  std::vector<DegreeProfile> pa, pb;
  for (const auto& v : a.vertices()) pa.push_back(profile_of(a, v));
  for (const auto& v : b.vertices()) pb.push_back(profile_of(b, v));
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return res;
  }

  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const std::size_t n = va.size();
  auto ma = adjacency_matrix(a);
  auto mb = adjacency_matrix(b);
  std::vector<std::size_t> assign(n);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !(pa[i] == pb[j])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        if (ma.at[i][k] != mb.at[j][assign[k]]) ok = false;
        if (ma.at[k][i] != mb.at[assign[k]][j]) ok = false;
      }
      if (ma.at[i][i] != mb.at[j][j]) ok = false;
      if (!ok) continue;
      used[j] = true;
      assign[i] = j;
      if (place(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };

  if (!place(0)) return res;

  res.status = IsomorphismResult::Status::Found;
  for (std::size_t i = 0; i < n; ++i) res.vertex_map[va[i]] = vb[assign[i]];

  // Pair parallel edges between matched endpoints in name order.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> slots;
  for (const auto& e : b.edges()) slots[{e.src, e.dst}].push_back(e.name);
  for (const auto& e : a.edges()) {
    auto key = std::make_pair(res.vertex_map.at(e.src), res.vertex_map.at(e.dst));
    auto& bucket = slots.at(key);
    res.edge_map[e.name] = bucket.front();
    bucket.erase(bucket.begin());
  }
  return res;
}

}  // namespace oegraph
