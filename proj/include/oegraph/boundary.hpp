#ifndef OEGRAPH_BOUNDARY_HPP
#define OEGRAPH_BOUNDARY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oegraph/graph.hpp"

namespace oegraph {

/*
 * A point of the boundary path space of a finite graph, in exact symbolic
 * form:
 *
 *   FiniteToSink       a finite path ending in a sink (length 0 allowed:
 *                      the sink itself);
 *   EventuallyPeriodic an infinite path mu . nu^inf, stored in canonical
 *                      form: nu is primitive (not a power of a shorter
 *                      cycle) and mu is the shortest prefix, i.e. mu does
 *                      not end with the last edge of nu;
 *   TruncatedInfinite  the first k edges of an otherwise unresolved
 *                      infinite path.  Such markers appear only in
 *                      depth-bounded enumerations, never as exact values.
 *
 * Canonical form makes equality of eventually periodic points a plain
 * component-wise comparison.  Use the factories; they canonicalize.
 */
class BoundaryPoint {
 public:
  enum class Kind { FiniteToSink, EventuallyPeriodic, TruncatedInfinite };

  // An empty placeholder; real points come from the factories.
  BoundaryPoint() = default;

  static BoundaryPoint finite(const Graph& g, Path mu);       // r(mu) must be a sink
  static BoundaryPoint at_vertex(const Graph& g, VertexId v); // length-0 point at a sink
  // mu . nu^inf with r(mu) = s(nu); canonicalizes.
  static BoundaryPoint eventually_periodic(const Graph& g, Path mu, Path nu);
  static BoundaryPoint truncated(const Graph& g, Path prefix);

  Kind kind() const { return kind_; }
  bool exact() const { return kind_ != Kind::TruncatedInfinite; }
  bool infinite() const { return kind_ == Kind::EventuallyPeriodic; }

  const Path& prefix() const { return prefix_; }
  // The primitive cycle; only for EventuallyPeriodic points.
  const Path& cycle() const;

  // Length of the path the point denotes; nullopt when infinite.  Truncated
  // markers report their known prefix length.
  std::optional<std::size_t> length() const;
  bool length_at_least(std::size_t k) const;

  // prefix length, plus cycle length for eventually periodic points.
  std::size_t description_length() const;

  // Edge at position i (0-based) or nullopt past the end / beyond a
  // truncation.
  std::optional<EdgeId> edge_at(std::size_t i) const;
  // The vertex reached after i edges; needs the graph to resolve.
  VertexId vertex_at(const Graph& g, std::size_t i) const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend bool operator<(const BoundaryPoint& a, const BoundaryPoint& b);

 private:
  Kind kind_ = Kind::FiniteToSink;
  Path prefix_;
  std::optional<Path> cycle_;
};

std::string to_string(const BoundaryPoint& p);

// One application of the shift: strips the first edge.  A single edge into a
// sink becomes the length-0 point at that sink.  Undefined on length-0
// points (throws DomainError).
BoundaryPoint shift(const Graph& g, const BoundaryPoint& p);
BoundaryPoint shift_n(const Graph& g, const BoundaryPoint& p, std::size_t n);

enum class PointClass {
  EventuallySink,              // finite: some shift lands on a sink
  EventuallyPeriodicIsolated,  // tail cycles on a cycle without exit
  NotIsolated,
};

std::string to_string(PointClass c);

// Structural isolation test: finite points are isolated (their own cylinder
// is a singleton); an eventually periodic point is isolated iff its cycle
// has no exit.  Truncated markers are indeterminate (nullopt).
std::optional<bool> is_isolated(const Graph& g, const BoundaryPoint& p);

// Classification of an exact point.  On a finite graph every isolated point
// is eventually sink or eventually periodic: a tail that keeps moving
// through non-branching vertices must revisit one and close a cycle.
// check_tails_enter_cycles certifies that per graph.
PointClass classify_point(const Graph& g, const BoundaryPoint& p);
bool check_tails_enter_cycles(const Graph& g);

/*
 * Enumerates boundary points whose description fits in `bound`:
 *
 *  - every finite point of length <= bound;
 *  - when the boundary is countable, every eventually periodic point with
 *    prefix length <= bound (the cycle is then the unique return path at
 *    the tail vertex, whatever its length), which is complete up to that
 *    prefix bound;
 *  - otherwise eventually periodic points with prefix and cycle length
 *    <= bound, plus one TruncatedInfinite marker per length-`bound` path
 *    whose endpoint still reaches a cycle.
 *
 * Sorted and duplicate-free.
 */
std::vector<BoundaryPoint> enumerate_boundary(const Graph& g, std::size_t bound);

/*
 * The compact open set Z(mu \ F): points extending mu whose next edge
 * avoids F, together with mu itself when mu is already a boundary point.
 * F must be a subset of the edges leaving r(mu).
 */
struct CylinderSet {
  Path base;
  std::set<EdgeId> excluded;

  static CylinderSet of(const Graph& g, Path base, std::set<EdgeId> excluded = {});
};

bool cylinder_contains(const Graph& g, const CylinderSet& z, const BoundaryPoint& p);

// Exact check, by expansion to the given depth, that the cylinders cover the
// whole boundary and are pairwise disjoint.  Every base must be shorter than
// the depth.
struct PartitionCheck {
  bool covers = false;
  bool disjoint = false;
  std::vector<std::string> issues;
  bool ok() const { return covers && disjoint; }
};

PartitionCheck cylinders_partition_boundary(const Graph& g,
                                            const std::vector<CylinderSet>& cylinders,
                                            std::size_t depth);

// Least (m, n), in lexicographic order, with shift^m(x) = shift^n(y) and
// m, n <= bound; nullopt when the tails stay apart within the bound.
std::optional<std::pair<std::size_t, std::size_t>> tail_equivalence(
    const Graph& g, const BoundaryPoint& x, const BoundaryPoint& y, std::size_t bound);

}  // namespace oegraph

#endif
