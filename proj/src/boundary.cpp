#include "oegraph/boundary.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace oegraph {

namespace {

// Rotation moving the last edge to the front; a cycle stays a cycle.
Path rotate_right(const Graph& g, const Path& cycle) {
  std::vector<EdgeId> seq = cycle.edges();
  EdgeId last = seq.back();
  seq.pop_back();
  seq.insert(seq.begin(), last);
  return Path::of_edges(g, seq);
}

Path rotate_left(const Graph& g, const Path& cycle) {
  std::vector<EdgeId> seq = cycle.edges();
  EdgeId first = seq.front();
  seq.erase(seq.begin());
  seq.push_back(first);
  return Path::of_edges(g, seq);
}

// Shortest cycle whose power gives the sequence back.
Path primitive_root(const Graph& g, const Path& cycle) {
  const auto& seq = cycle.edges();
  const std::size_t n = seq.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i)
      if (seq[i] != seq[i % p]) repeats = false;
    if (repeats) return Path::of_edges(g, std::vector<EdgeId>(seq.begin(), seq.begin() + p));
  }
  return cycle;
}

}  // namespace

BoundaryPoint BoundaryPoint::finite(const Graph& g, Path mu) {
  if (!g.is_sink(mu.range()))
    throw DomainError("finite boundary point must end in a sink, got '" + mu.range() + "'");
  BoundaryPoint p;
  p.kind_ = Kind::FiniteToSink;
  p.prefix_ = std::move(mu);
  return p;
}

BoundaryPoint BoundaryPoint::at_vertex(const Graph& g, VertexId v) {
  return finite(g, Path::at_vertex(g, std::move(v)));
}

BoundaryPoint BoundaryPoint::eventually_periodic(const Graph& g, Path mu, Path nu) {
  if (nu.length() == 0) throw DomainError("periodic part must have length at least 1");
  if (nu.source() != nu.range())
    throw DomainError("periodic part is not a cycle: '" + nu.source() + "' to '" + nu.range() + "'");
  if (mu.range() != nu.source())
    throw DomainError("prefix ends at '" + mu.range() + "' but cycle is based at '" + nu.source() + "'");
  nu = primitive_root(g, nu);
  // Shortest prefix: while the prefix ends with the cycle's closing edge,
  // that edge can be absorbed by rotating the cycle backwards.
  while (mu.length() >= 1 && mu.edges().back() == nu.edges().back()) {
    mu = mu.drop_last(g);
    nu = rotate_right(g, nu);
  }
  BoundaryPoint p;
  p.kind_ = Kind::EventuallyPeriodic;
  p.prefix_ = std::move(mu);
  p.cycle_ = std::move(nu);
  return p;
}

BoundaryPoint BoundaryPoint::truncated(const Graph& g, Path prefix) {
  if (g.is_sink(prefix.range()))
    throw DomainError("a truncated marker cannot end in a sink; the point would be complete");
  BoundaryPoint p;
  p.kind_ = Kind::TruncatedInfinite;
  p.prefix_ = std::move(prefix);
  return p;
}

const Path& BoundaryPoint::cycle() const {
  if (!cycle_) throw DomainError("point has no periodic part");
  return *cycle_;
}

std::optional<std::size_t> BoundaryPoint::length() const {
  if (kind_ == Kind::FiniteToSink) return prefix_.length();
  return std::nullopt;
}

bool BoundaryPoint::length_at_least(std::size_t k) const {
  if (kind_ == Kind::FiniteToSink) return prefix_.length() >= k;
  return true;
}

std::size_t BoundaryPoint::description_length() const {
  return prefix_.length() + (cycle_ ? cycle_->length() : 0);
}

std::optional<EdgeId> BoundaryPoint::edge_at(std::size_t i) const {
  if (i < prefix_.length()) return prefix_.edges()[i];
  if (kind_ == Kind::EventuallyPeriodic) {
    const auto& c = cycle_->edges();
    return c[(i - prefix_.length()) % c.size()];
  }
  return std::nullopt;
}

VertexId BoundaryPoint::vertex_at(const Graph& g, std::size_t i) const {
  if (i == 0) return prefix_.length() ? prefix_.source() : prefix_.range();
  auto e = edge_at(i - 1);
  if (!e) {
    if (kind_ == Kind::FiniteToSink && i == prefix_.length()) return prefix_.range();
    throw DomainError("vertex position beyond the known part of the point");
  }
  return g.edge(*e).dst;
}

bool operator<(const BoundaryPoint& a, const BoundaryPoint& b) {
  if (a.prefix_ != b.prefix_) return a.prefix_ < b.prefix_;
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  if (a.cycle_.has_value() != b.cycle_.has_value()) return b.cycle_.has_value();
  if (a.cycle_ && b.cycle_ && !(*a.cycle_ == *b.cycle_)) return *a.cycle_ < *b.cycle_;
  return false;
}

std::string to_string(const BoundaryPoint& p) {
  std::ostringstream out;
  const auto& seq = p.prefix().edges();
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
  switch (p.kind()) {
    case BoundaryPoint::Kind::FiniteToSink:
      out << (seq.empty() ? "@" : " @") << p.prefix().range();
      break;
    case BoundaryPoint::Kind::EventuallyPeriodic: {
      if (!seq.empty()) out << " ";
      out << "(";
      const auto& c = p.cycle().edges();
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
      out << ")^inf";
      break;
    }
    case BoundaryPoint::Kind::TruncatedInfinite:
      if (seq.empty())
        out << "@" << p.prefix().range() << " ...";
      else
        out << " ...";
      break;
  }
  return out.str();
}

BoundaryPoint shift(const Graph& g, const BoundaryPoint& p) {
  switch (p.kind()) {
    case BoundaryPoint::Kind::FiniteToSink:
      if (p.prefix().length() == 0)
        throw DomainError("shift undefined on the length-0 point at '" + p.prefix().range() + "'");
      return BoundaryPoint::finite(g, p.prefix().drop_first(g));
    case BoundaryPoint::Kind::EventuallyPeriodic:
      if (p.prefix().length() >= 1)
        return BoundaryPoint::eventually_periodic(g, p.prefix().drop_first(g), p.cycle());
      return BoundaryPoint::eventually_periodic(
          g, Path::at_vertex(g, g.edge(p.cycle().edges().front()).dst), rotate_left(g, p.cycle()));
    case BoundaryPoint::Kind::TruncatedInfinite:
      if (p.prefix().length() == 0)
        throw DomainError("shift undefined on a truncated marker with no known edge");
      return BoundaryPoint::truncated(g, p.prefix().drop_first(g));
  }
  throw DomainError("unreachable point kind");
}

BoundaryPoint shift_n(const Graph& g, const BoundaryPoint& p, std::size_t n) {
  BoundaryPoint cur = p;
  for (std::size_t i = 0; i < n; ++i) cur = shift(g, cur);
  return cur;
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::EventuallySink: return "eventually-sink";
    case PointClass::EventuallyPeriodicIsolated: return "eventually-periodic-isolated";
    case PointClass::NotIsolated: return "not-isolated";
  }
  return "?";
}

std::optional<bool> is_isolated(const Graph& g, const BoundaryPoint& p) {
  switch (p.kind()) {
    case BoundaryPoint::Kind::FiniteToSink:
      return true;
    case BoundaryPoint::Kind::EventuallyPeriodic:
      return !cycle_has_exit(g, Cycle::of(g, p.cycle()));
    case BoundaryPoint::Kind::TruncatedInfinite:
      return std::nullopt;
  }
  return std::nullopt;
}

PointClass classify_point(const Graph& g, const BoundaryPoint& p) {
  if (!p.exact()) throw DomainError("cannot classify a truncated marker");
  if (p.kind() == BoundaryPoint::Kind::FiniteToSink) return PointClass::EventuallySink;
  return *is_isolated(g, p) ? PointClass::EventuallyPeriodicIsolated : PointClass::NotIsolated;
}

bool check_tails_enter_cycles(const Graph& g) {
  // Pigeonhole certificate: every path of |vertices| edges repeats a vertex,
  // so an infinite tail keeps closing cycles and never wanders forever.
  const std::size_t depth = g.vertices().size();
  const std::size_t cap = 200000;
  std::size_t seen = 0;
  bool ok = true;
  std::function<void(const VertexId&, std::vector<VertexId>&)> walk =
      [&](const VertexId& cur, std::vector<VertexId>& visited) {
        if (!ok || ++seen > cap) {
          ok = ok && seen <= cap;
          return;
        }
        if (visited.size() == depth + 1) {
          std::set<VertexId> uniq(visited.begin(), visited.end());
          if (uniq.size() == visited.size()) ok = false;
          return;
        }
        for (const auto& name : g.out_edges(cur)) {
          visited.push_back(g.edge(name).dst);
          walk(g.edge(name).dst, visited);
          visited.pop_back();
        }
      };
  for (const auto& v : g.vertices()) {
    std::vector<VertexId> visited{v};
    walk(v, visited);
  }
  return ok;
}

namespace {

std::vector<Path> all_paths_up_to(const Graph& g, std::size_t maxlen) {
  std::vector<Path> out;
  for (const auto& v : g.vertices()) {
    out.push_back(Path::at_vertex(g, v));
    std::vector<EdgeId> stack;
    std::function<void(const VertexId&)> grow = [&](const VertexId& cur) {
      if (stack.size() >= maxlen) return;
      for (const auto& name : g.out_edges(cur)) {
        stack.push_back(name);
        out.push_back(Path::of_edges(g, stack));
        grow(g.edge(name).dst);
        stack.pop_back();
      }
    };
    grow(v);
  }
  return out;
}

std::vector<Path> closed_paths_at(const Graph& g, const VertexId& v, std::size_t maxlen) {
  std::vector<Path> out;
  std::vector<EdgeId> stack;
  std::function<void(const VertexId&)> grow = [&](const VertexId& cur) {
    if (stack.size() >= maxlen) return;
    for (const auto& name : g.out_edges(cur)) {
      stack.push_back(name);
      const VertexId& w = g.edge(name).dst;
      if (w == v) out.push_back(Path::of_edges(g, stack));
      grow(w);
      stack.pop_back();
    }
  };
  grow(v);
  return out;
}

std::set<VertexId> vertices_reaching_a_cycle(const Graph& g) {
  // Vertices on cycles: their component has an internal edge.
  std::set<VertexId> on_cycle;
  for (const auto& c : vertex_simple_cycles(g))
    for (const auto& name : c.edges()) on_cycle.insert(g.edge(name).src);
  // Walk edges backwards from the cycle vertices.
  std::set<VertexId> reach = on_cycle;
  std::vector<VertexId> todo(on_cycle.begin(), on_cycle.end());
  while (!todo.empty()) {
    VertexId v = todo.back();
    todo.pop_back();
    for (const auto& name : g.in_edges(v)) {
      const VertexId& u = g.edge(name).src;
      if (reach.insert(u).second) todo.push_back(u);
    }
  }
  return reach;
}

}  // namespace

std::vector<BoundaryPoint> enumerate_boundary(const Graph& g, std::size_t bound) {
  const bool countable = has_countable_boundary(g);
  std::set<BoundaryPoint> pts;
  auto paths = all_paths_up_to(g, bound);
  for (const auto& mu : paths) {
    if (g.is_sink(mu.range())) pts.insert(BoundaryPoint::finite(g, mu));
    if (countable) {
      for (const auto& rp : return_paths_at(g, mu.range()))
        pts.insert(BoundaryPoint::eventually_periodic(g, mu, rp.path()));
    } else {
      for (const auto& nu : closed_paths_at(g, mu.range(), bound))
        pts.insert(BoundaryPoint::eventually_periodic(g, mu, nu));
    }
  }
  if (!countable) {
    auto reach = vertices_reaching_a_cycle(g);
    for (const auto& mu : paths)
      if (mu.length() == bound && reach.count(mu.range()))
        pts.insert(BoundaryPoint::truncated(g, mu));
  }
  return std::vector<BoundaryPoint>(pts.begin(), pts.end());
}

CylinderSet CylinderSet::of(const Graph& g, Path base, std::set<EdgeId> excluded) {
  const auto& outs = g.out_edges(base.range());
  for (const auto& name : excluded)
    if (std::find(outs.begin(), outs.end(), name) == outs.end())
      throw DomainError("excluded edge '" + name + "' does not leave '" + base.range() + "'");
  return CylinderSet{std::move(base), std::move(excluded)};
}

bool cylinder_contains(const Graph& g, const CylinderSet& z, const BoundaryPoint& p) {
  const std::size_t k = z.base.length();
  if (p.vertex_at(g, 0) != z.base.source()) return false;
  if (!p.length_at_least(k)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    auto e = p.edge_at(i);
    if (!e) throw DomainError("truncated marker too short to decide cylinder membership");
    if (*e != z.base.edges()[i]) return false;
  }
  auto next = p.edge_at(k);
  if (!next) {
    if (p.kind() == BoundaryPoint::Kind::TruncatedInfinite)
      throw DomainError("truncated marker too short to decide cylinder membership");
    return true;  // the point is exactly the base path
  }
  return !z.excluded.count(*next);
}

namespace {

std::string path_label(const Path& p) {
  if (p.length() == 0) return "@" + p.source();
  std::string out;
  for (const auto& e : p.edges()) {
    if (!out.empty()) out += " ";
    out += e;
  }
  return out;
}

}  // namespace

PartitionCheck cylinders_partition_boundary(const Graph& g,
                                            const std::vector<CylinderSet>& cylinders,
                                            std::size_t depth) {
  PartitionCheck res;
  for (const auto& z : cylinders) {
    if (z.base.length() >= depth) {
      res.issues.push_back("cylinder base '" + path_label(z.base) +
                           "' is not shorter than the expansion depth");
      return res;
    }
  }

  // Atoms of the depth-d expansion: complete finite points shorter than d,
  // and the chunk Z(p) for every length-d path p.  Each chunk is entirely
  // inside or entirely outside each cylinder because the bases are shorter.
  struct Atom {
    Path path;
    bool chunk;  // true: stands for Z(path); false: the finite point itself
  };
  std::vector<Atom> atoms;
  for (const auto& p : all_paths_up_to(g, depth)) {
    if (p.length() < depth && g.is_sink(p.range()))
      atoms.push_back({p, false});
    else if (p.length() == depth)
      atoms.push_back({p, true});
  }

  res.covers = true;
  res.disjoint = true;
  for (const auto& atom : atoms) {
    std::size_t hits = 0;
    for (const auto& z : cylinders) {
      bool inside;
      if (atom.chunk) {
        inside = true;
        if (atom.path.source() != z.base.source()) inside = false;
        for (std::size_t i = 0; inside && i < z.base.length(); ++i)
          if (atom.path.edges()[i] != z.base.edges()[i]) inside = false;
        if (inside && z.base.length() < atom.path.length() &&
            z.excluded.count(atom.path.edges()[z.base.length()]))
          inside = false;
      } else {
        inside = cylinder_contains(g, z, BoundaryPoint::finite(g, atom.path));
      }
      if (inside) ++hits;
    }
    std::string label = atom.chunk ? ("Z(" + path_label(atom.path) + ")")
                                   : to_string(BoundaryPoint::finite(g, atom.path));
    if (hits == 0) {
      res.covers = false;
      res.issues.push_back("uncovered: " + label);
    } else if (hits > 1) {
      res.disjoint = false;
      res.issues.push_back("overlap at: " + label);
    }
  }
  return res;
}

std::optional<std::pair<std::size_t, std::size_t>> tail_equivalence(
    const Graph& g, const BoundaryPoint& x, const BoundaryPoint& y, std::size_t bound) {
  if (!x.exact() || !y.exact())
    throw DomainError("tail equivalence needs exact points");
  for (std::size_t m = 0; m <= bound; ++m) {
    if (!x.length_at_least(m)) break;
    BoundaryPoint sx = shift_n(g, x, m);
    for (std::size_t n = 0; n <= bound; ++n) {
      if (!y.length_at_least(n)) break;
      if (sx == shift_n(g, y, n)) return std::make_pair(m, n);
    }
  }
  return std::nullopt;
}

}  // namespace oegraph
