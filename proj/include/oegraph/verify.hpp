#ifndef OEGRAPH_VERIFY_HPP
#define OEGRAPH_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "oegraph/orbit_map.hpp"

namespace oegraph {

struct VerifyConfig {
  std::size_t depth = 8;
  std::size_t exponent_bound = 8;
};

// One checked point of an orbit condition: the exponents that make the
// shifted images agree, and whether they came from declared functions or
// from the bounded search.
struct ExponentWitness {
  BoundaryPoint x;
  std::size_t l = 0;
  std::size_t m = 0;
  bool declared = false;
};

struct ConditionOutcome {
  bool holds = false;
  std::optional<ExponentWitness> witness;
  std::string reason;  // set when the condition fails
};

// Evaluates one orbit condition at one point of the map's source boundary
// (point length >= 1): with declared exponent functions the equation is
// checked exactly at their values; otherwise the least (l, m) <= bound in
// lexicographic order is searched.  Checking condition (2) of a map is
// checking condition (1) of its inverse.
ConditionOutcome check_condition_at(const OrbitMap& map, const BoundaryPoint& x,
                                    std::size_t bound);

/*
 * Depth-bounded certification of a candidate orbit map.  PASS is a
 * certificate at the stated depth, not a proof:
 *
 *  (a) the map is a bijection between the two depth-d enumerations;
 *  (b) both orbit conditions hold at every enumerated point of length >= 1,
 *      exactly at declared exponents or witnessed by bounded search;
 *  (c) continuity proxy: on each depth-d cylinder of non-isolated points a
 *      single exponent pair works for the whole cylinder.
 *
 * FAIL always carries a concrete counterexample.  Ill-formed maps
 * (overlapping guards, unmatched points, non-invertible tables) raise
 * MapError instead of failing.
 */
struct VerificationReport {
  std::size_t depth = 0;
  std::size_t exponent_bound = 0;
  bool complete_enumeration = false;  // both boundaries countable
  std::size_t points_checked = 0;

  bool bijective = false;
  std::vector<std::string> bijectivity_issues;

  bool forward_exponents_ok = false;   // condition (1)
  bool backward_exponents_ok = false;  // condition (2)
  std::vector<ExponentWitness> forward_witnesses;
  std::vector<ExponentWitness> backward_witnesses;

  bool continuity_ok = false;
  std::vector<std::string> continuity_exceptions;

  std::optional<BoundaryPoint> counterexample;
  std::string failure;

  std::optional<bool> periodic_points_preserved;
  std::optional<BoundaryPoint> periodic_witness;

  bool pass() const {
    return bijective && forward_exponents_ok && backward_exponents_ok && continuity_ok;
  }
};

VerificationReport verify(const OrbitMap& map, const VerifyConfig& config = {});

// Same, after checking that the two graphs are the map's endpoints.
VerificationReport verify(const Graph& source, const Graph& target, const OrbitMap& map,
                          const VerifyConfig& config = {});

// Checks that enumerated isolated points keep or lose eventual periodicity
// together with their images, in both directions.
struct PeriodicPreservation {
  bool preserved = false;
  std::optional<BoundaryPoint> witness;  // a point whose image disagrees
  std::string side;                      // "forward" or "backward"
  std::size_t points_checked = 0;
};

PeriodicPreservation preserves_periodic_points(const OrbitMap& map, std::size_t depth = 8);

}  // namespace oegraph

#endif
