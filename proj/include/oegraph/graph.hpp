#ifndef OEGRAPH_GRAPH_HPP
#define OEGRAPH_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oegraph/errors.hpp"

namespace oegraph {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId name;
  VertexId src;
  VertexId dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Raw graph data as read from a file or assembled by hand, before validation.
struct GraphParts {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
};

// Checks the structural invariants of GraphParts and returns one message per
// violation.  An empty result means the data describes a valid finite
// directed graph: non-empty vertex set, unique identifiers, and both edge
// endpoints present.  Parallel edges and loops are allowed.
std::vector<std::string> validate(const GraphParts& parts);

/*
 * A finite directed graph with named vertices and named edges.
 *
 * Vertices are kept sorted lexicographically and edges sorted by name, so
 * equality is structural and every iteration over the graph is
 * deterministic.  Instances are immutable once constructed; all operations
 * take the graph by const reference and return fresh values.
 */
class Graph {
 public:
  // An empty placeholder; real graphs come from from_parts.
  Graph() = default;

  // Validates and builds; throws GraphError listing every diagnostic.
  static Graph from_parts(GraphParts parts);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const VertexId& v) const;
  bool has_edge(const EdgeId& e) const;
  const Edge& edge(const EdgeId& e) const;  // throws GraphError if unknown

  // Edge names leaving / entering a vertex, sorted.
  const std::vector<EdgeId>& out_edges(const VertexId& v) const;
  const std::vector<EdgeId>& in_edges(const VertexId& v) const;

  std::size_t out_degree(const VertexId& v) const { return out_edges(v).size(); }
  std::size_t in_degree(const VertexId& v) const { return in_edges(v).size(); }

  // A sink emits no edges.  Every vertex of a finite graph receives paths of
  // bounded length, so sinks are exactly the singular vertices here.
  bool is_sink(const VertexId& v) const { return out_degree(v) == 0; }
  std::vector<VertexId> sinks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::map<VertexId, std::vector<EdgeId>> out_;
  std::map<VertexId, std::vector<EdgeId>> in_;
};

/*
 * A finite path: either a single vertex (length 0) or a composable edge
 * sequence.  The endpoints are resolved at construction, so a Path stays
 * meaningful without the graph at hand.  source() is where the path starts,
 * range() where it ends.
 */
class Path {
 public:
  // An empty placeholder; real paths come from the factories.
  Path() = default;

  static Path at_vertex(const Graph& g, VertexId v);
  static Path of_edges(const Graph& g, std::vector<EdgeId> edges);

  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const VertexId& source() const { return src_; }
  const VertexId& range() const { return dst_; }

  // Subpath dropping the first edge; length must be >= 1.  The graph is
  // needed to resolve the new source vertex.
  Path drop_first(const Graph& g) const;
  // Subpath dropping the last edge.
  Path drop_last(const Graph& g) const;
  // Concatenation; range() must equal other.source().
  Path concat(const Graph& g, const Path& other) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.edges_ != b.edges_) return a.edges_ < b.edges_;
    return a.src_ < b.src_;
  }

 private:
  std::vector<EdgeId> edges_;
  VertexId src_;
  VertexId dst_;
};

/*
 * A cycle is a path of length >= 1 with source() == range().  Rotations are
 * distinct cycles.  The flags are computed from the edge sequence:
 *
 *   vertex_simple : the ranges r(e_1), ..., r(e_n) are pairwise distinct;
 *   return_path   : no proper prefix already returns to the base vertex.
 */
class Cycle {
 public:
  static Cycle of(const Graph& g, Path path);

  const Path& path() const { return path_; }
  const std::vector<EdgeId>& edges() const { return path_.edges(); }
  std::size_t length() const { return path_.length(); }
  const VertexId& base() const { return path_.source(); }
  bool vertex_simple() const { return vertex_simple_; }
  bool is_return_path() const { return return_path_; }
  bool is_loop() const { return path_.length() == 1; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend bool operator<(const Cycle& a, const Cycle& b) { return a.path_ < b.path_; }

 private:
  Cycle() = default;
  Path path_;
  bool vertex_simple_ = false;
  bool return_path_ = false;
};

// The rotation of a cycle whose edge sequence is lexicographically least,
// used to deduplicate the rotation class of a cycle.
Cycle canonical_rotation(const Graph& g, const Cycle& c);

struct VertexClassification {
  std::vector<VertexId> regular;  // vertices emitting at least one edge
  std::vector<VertexId> sinks;    // vertices emitting none
};

VertexClassification classify_vertices(const Graph& g);

// All vertex-simple cycles, rotations included, sorted.  A vertex-simple
// cycle has length at most |vertices|, so the search is exhaustive.
std::vector<Cycle> vertex_simple_cycles(const Graph& g);

// True iff some edge other than the cycle's own edge leaves a vertex on the
// cycle.
bool cycle_has_exit(const Graph& g, const Cycle& c);

// True iff every vertex-simple cycle has an exit; equivalent to every cycle
// having one, since any cycle passes through a vertex-simple one.
bool satisfies_condition_L(const Graph& g);

struct NoExitCycleData {
  // Vertices lying on some vertex-simple cycle without exit, sorted.
  std::vector<VertexId> cycle_vertices;
  // When every such cycle is a loop: the loop edge at each cycle vertex.
  std::optional<std::map<VertexId, EdgeId>> loops;
  // Otherwise one offending non-loop cycle as evidence.
  std::optional<Cycle> non_loop_witness;

  bool loops_available() const { return loops.has_value(); }
};

NoExitCycleData no_exit_cycle_data(const Graph& g);

// Return paths based at v (cycles meeting v only at the start/end), up to
// the given length.  When every vertex supports at most one return path the
// default bound |vertices| already lists them all; otherwise the list is a
// bounded front of an infinite family.
std::vector<Cycle> return_paths_at(const Graph& g, const VertexId& v,
                                   std::optional<std::size_t> max_length = std::nullopt);

// True iff every vertex supports at most one return path, i.e. every
// strongly connected component with an edge is a single simple cycle.  The
// boundary path space is then countable.
bool has_countable_boundary(const Graph& g);

struct CountMatrix {
  std::vector<VertexId> order;                 // sorted vertex order
  std::vector<std::vector<std::int64_t>> at;   // at[i][j] = #edges order[i] -> order[j]
};

CountMatrix adjacency_matrix(const Graph& g);

struct IsomorphismResult {
  enum class Status { Found, None, TooLarge };
  Status status = Status::None;
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, EdgeId> edge_map;

  bool found() const { return status == Status::Found; }
};

// Backtracking search for a graph isomorphism (vertex bijection plus
// compatible edge bijection).  Refuses graphs beyond max_vertices rather
// than risk an unsound shortcut.
IsomorphismResult find_isomorphism(const Graph& a, const Graph& b,
                                   std::size_t max_vertices = 12);

}  // namespace oegraph

#endif
