#ifndef OEGRAPH_MOVES_HPP
#define OEGRAPH_MOVES_HPP

#include "oegraph/verify.hpp"

namespace oegraph {

/*
 * Result of a graph move: the rewritten graph, the boundary map attached to
 * the move when it carries one, and bookkeeping about what changed.
 */
struct MoveResult {
  Graph graph;
  std::optional<OrbitMap> map;

  std::vector<VertexId> cycle_vertices;      // vertices on no-exit cycles touched
  std::vector<EdgeId> removed_edges;
  std::vector<EdgeId> added_edges;
  std::vector<Cycle> cycle_representatives;  // canonicalize: one cycle per class
  std::vector<Path> swapped_paths;           // sink swap: the set F
};

/*
 * Removes the loop at every vertex whose only cycle is an exit-free loop.
 * Those vertices become sinks.  The attached map sends a finite point
 * ending at such a vertex to the point winding the removed loop forever,
 * and is the identity elsewhere; it intertwines the shifts exactly.  Both
 * exponent directions are declared.  Fails (MoveError) when some exit-free
 * cycle is not a loop; canonicalize first.
 */
MoveResult unplug(const Graph& g);

// Adds a fresh loop at each listed sink ("plug_<vertex>", numeric suffix on
// collision).  Inverse of unplug up to isomorphism.  No map attached.
MoveResult plug(const Graph& g, const std::vector<VertexId>& at);

/*
 * Replaces every exit-free vertex-simple cycle by a loop: cycles are
 * grouped by their vertex set, each class is represented by the rotation
 * based at its least vertex, and the first edge of each representative is
 * replaced by a loop "cyc_<base>" at the base vertex.  Classes that are
 * already loops stay untouched, so a second application changes nothing.
 * The output satisfies the unplug precondition.  No map attached.
 */
MoveResult canonicalize(const Graph& g);

/*
 * Exchanges each listed path with the sink it ends in: the map swaps the
 * point mu with the length-0 point at r(mu) and fixes everything else.
 * Paths must have length >= 1, end in pairwise distinct sinks, and as a
 * finite set of isolated points they are closed in the boundary.  The map
 * is an involution; both exponent directions are declared exactly.
 */
MoveResult sink_swap(const Graph& g, const std::vector<Path>& paths);

/*
 * Turns a verified orbit equivalence beta between two graphs whose
 * exit-free cycles are loops into one between their unplugged graphs that
 * matches the cycle vertices on the two sides:
 *
 *   lambda = unplug(E')^-1 . beta . unplug(E)   (between the unplugged boundaries)
 *   gamma  = sink_swap(lambda(V)) . lambda      with V the cycle vertices moved by lambda
 *
 * gamma sends the length-0 point at each cycle vertex of E to one at a
 * cycle vertex of E'.  Rejected (ok = false) when beta fails verification
 * or does not preserve periodic points.
 */
struct NormalizeResult {
  bool ok = false;
  std::string error;
  std::optional<BoundaryPoint> counterexample;

  std::optional<OrbitMap> lambda;
  std::optional<OrbitMap> gamma;
  std::vector<VertexId> moved_vertices;  // V
  std::vector<Path> swap_paths;          // lambda(V)
  bool cycle_vertices_correspond = false;
  VerificationReport beta_report;
};

NormalizeResult normalize_orbit_equivalence(const Graph& E, const Graph& F,
                                            const OrbitMap& beta,
                                            const VerifyConfig& config = {});

}  // namespace oegraph

#endif
