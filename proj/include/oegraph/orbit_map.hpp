#ifndef OEGRAPH_ORBIT_MAP_HPP
#define OEGRAPH_ORBIT_MAP_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "oegraph/boundary.hpp"

namespace oegraph {

class OrbitMap;

/*
 * Rule forms of a candidate boundary map.  A map holds an ordered rule
 * list; the first matching rule applies.  Non-identity guards are expected
 * to be pairwise disjoint (the verifier audits this on its test set), so
 * the order carries no meaning beyond putting an identity fallback last.
 */

// Sends every point to the same point read in the target graph.
struct RuleIdentity {};

// Explicit finite lookup table on canonical points.
struct RuleFiniteTable {
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> entries;  // sorted by source point
};

// Finite point ending at a vertex v of `loops` becomes the infinite point
// winding the target loop at v forever.
struct RuleAppendLoopTail {
  std::map<VertexId, EdgeId> loops;
};

// Inverse of the above: a point with periodic part exactly the loop at v
// loses its tail and ends at the (target) sink v.
struct RuleStripLoopTail {
  std::map<VertexId, EdgeId> loops;
};

// Composition that did not close symbolically; applies inner, then outer.
struct RuleChain {
  std::shared_ptr<const OrbitMap> inner;
  std::shared_ptr<const OrbitMap> outer;
};

using MapRule = std::variant<RuleIdentity, RuleFiniteTable, RuleAppendLoopTail,
                             RuleStripLoopTail, RuleChain>;

/*
 * A declared shift-exponent function on boundary points, as guard/formula
 * cases evaluated first-match.  A guard is a finite point set; the
 * guard-less case is the default branch.  Formulas are the shapes arising
 * from the concrete moves: a constant, length plus an offset, or a per-point
 * table.
 */
struct CocycleCase {
  std::optional<std::set<BoundaryPoint>> guard;  // nullopt: default branch

  enum class Formula { Constant, LengthPlus, Table };
  Formula formula = Formula::Constant;
  long value = 0;  // Constant: the value; LengthPlus: |x| + value
  std::map<BoundaryPoint, std::size_t> table;
};

using CocycleFn = std::vector<CocycleCase>;

std::size_t evaluate_cocycle(const CocycleFn& fn, const BoundaryPoint& x);

/*
 * Declared exponents for the two orbit conditions, when known:
 *
 *   condition (1):  shift_F^{m(x)}( k(shift_E(x)) ) = shift_F^{l(x)}( k(x) )
 *   condition (2):  shift_E^{m'(y)}( k^{-1}(shift_F(y)) ) = shift_E^{l'(y)}( k^{-1}(y) )
 *
 * Absent functions make the verifier search exponents instead.
 */
struct DeclaredCocycles {
  std::optional<CocycleFn> l, m;
  std::optional<CocycleFn> l_prime, m_prime;
};

/*
 * A candidate orbit map between the boundary spaces of two graphs, given by
 * rules that evaluate exactly on symbolic points.  Maps are values: they
 * carry copies of both graphs.
 */
class OrbitMap {
 public:
  OrbitMap(Graph source, Graph target, std::vector<MapRule> rules,
           DeclaredCocycles cocycles = {});

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::vector<MapRule>& rules() const { return rules_; }
  const DeclaredCocycles& cocycles() const { return cocycles_; }

  bool pure_identity() const;

 private:
  Graph source_;
  Graph target_;
  std::vector<MapRule> rules_;
  DeclaredCocycles cocycles_;
};

// The identity map of a graph, declared with the exponents (l, m) = (1, 0)
// that witness it exactly.
OrbitMap identity_map(const Graph& g);

// Whether a non-identity rule's guard matches the point (used for the
// disjointness audit; identity and chain rules match everything).
bool rule_guard_matches(const Graph& source, const MapRule& rule, const BoundaryPoint& p);

// Applies the first matching rule.  Throws MapError when no rule matches or
// the matched rule produces an ill-formed target point.
BoundaryPoint apply_map(const OrbitMap& map, const BoundaryPoint& p);

// Rule-wise inverse; finite tables must be injective.  Declared cocycles
// swap roles between the two orbit conditions.
OrbitMap invert_map(const OrbitMap& map);

/*
 * outer after inner.  Closes symbolically when the forms allow: identity
 * absorption, table against table, and append/strip cancellation (the
 * round trip of unplugging).  Anything else becomes a chain rule that
 * evaluates pointwise.  Composites carry no declared cocycles.
 */
OrbitMap compose_maps(const OrbitMap& outer, const OrbitMap& inner);

}  // namespace oegraph

#endif
