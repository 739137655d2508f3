#include "oegraph/verify.hpp"

#include <algorithm>
#include <map>

namespace oegraph {

namespace {

std::vector<BoundaryPoint> exact_points(const Graph& g, std::size_t depth) {
  std::vector<BoundaryPoint> out;
  for (const auto& p : enumerate_boundary(g, depth))
    if (p.exact()) out.push_back(p);
  return out;
}

// Exact test of the orbit equation at fixed exponents, minding lengths.
bool equation_holds(const OrbitMap& map, const BoundaryPoint& x, std::size_t l, std::size_t m) {
  const Graph& src = map.source();
  const Graph& tgt = map.target();
  BoundaryPoint kx = apply_map(map, x);
  BoundaryPoint ksx = apply_map(map, shift(src, x));
  if (!ksx.length_at_least(m) || !kx.length_at_least(l)) return false;
  return shift_n(tgt, ksx, m) == shift_n(tgt, kx, l);
}

bool specific_rule(const MapRule& r) {
  return !std::holds_alternative<RuleIdentity>(r) && !std::holds_alternative<RuleChain>(r);
}

}  // namespace

ConditionOutcome check_condition_at(const OrbitMap& map, const BoundaryPoint& x,
                                    std::size_t bound) {
  ConditionOutcome out;
  if (!x.length_at_least(1)) {
    out.reason = "condition undefined on a length-0 point";
    return out;
  }
  const auto& cc = map.cocycles();
  if (cc.l && cc.m) {
    std::size_t l, m;
    try {
      l = evaluate_cocycle(*cc.l, x);
      m = evaluate_cocycle(*cc.m, x);
    } catch (const MapError& err) {
      out.reason = err.what();
      return out;
    }
    out.witness = ExponentWitness{x, l, m, true};
    out.holds = equation_holds(map, x, l, m);
    if (!out.holds)
      out.reason = "declared exponents (l=" + std::to_string(l) + ", m=" + std::to_string(m) +
                   ") do not satisfy the orbit equation at " + to_string(x);
    return out;
  }
  for (std::size_t l = 0; l <= bound; ++l) {
    for (std::size_t m = 0; m <= bound; ++m) {
      if (equation_holds(map, x, l, m)) {
        out.holds = true;
        out.witness = ExponentWitness{x, l, m, false};
        return out;
      }
    }
  }
  out.reason = "no exponent pair up to " + std::to_string(bound) +
               " satisfies the orbit equation at " + to_string(x);
  return out;
}

namespace {

// Condition check for every point of length >= 1; fills witnesses and the
// first counterexample.
bool check_direction(const OrbitMap& map, const std::vector<BoundaryPoint>& points,
                     std::size_t bound, std::vector<ExponentWitness>& witnesses,
                     std::optional<BoundaryPoint>& counterexample, std::string& failure) {
  bool ok = true;
  for (const auto& x : points) {
    if (!x.length_at_least(1)) continue;
    ConditionOutcome res = check_condition_at(map, x, bound);
    if (res.holds) {
      witnesses.push_back(*res.witness);
    } else if (ok) {
      ok = false;
      counterexample = x;
      failure = res.reason;
    }
  }
  return ok;
}

// Groups the non-isolated enumerated points by their depth-d cylinder and
// demands one exponent pair per cylinder.
void check_continuity(const OrbitMap& map, const std::vector<BoundaryPoint>& points,
                      std::size_t depth, std::size_t bound, const std::string& label,
                      bool& ok, std::vector<std::string>& exceptions) {
  const Graph& src = map.source();
  std::map<std::vector<EdgeId>, std::vector<BoundaryPoint>> cylinders;
  for (const auto& x : points) {
    if (!x.length_at_least(1)) continue;
    auto iso = is_isolated(src, x);
    if (!iso || *iso) continue;
    std::vector<EdgeId> word;
    for (std::size_t i = 0; i < depth; ++i) word.push_back(*x.edge_at(i));
    cylinders[std::move(word)].push_back(x);
  }
  const auto& cc = map.cocycles();
  const bool declared = cc.l && cc.m;
  for (const auto& [word, members] : cylinders) {
    bool found = false;
    if (declared) {
      // The declared functions must take one value on the whole cylinder.
      std::optional<std::pair<std::size_t, std::size_t>> seen;
      found = true;
      for (const auto& x : members) {
        std::pair<std::size_t, std::size_t> lm;
        try {
          lm = {evaluate_cocycle(*cc.l, x), evaluate_cocycle(*cc.m, x)};
        } catch (const MapError&) {
          found = false;
          break;
        }
        if (!seen)
          seen = lm;
        else if (*seen != lm)
          found = false;
      }
    } else {
      for (std::size_t l = 0; l <= bound && !found; ++l) {
        for (std::size_t m = 0; m <= bound && !found; ++m) {
          bool all = true;
          for (const auto& x : members)
            if (!equation_holds(map, x, l, m)) {
              all = false;
              break;
            }
          found = all;
        }
      }
    }
    if (!found) {
      ok = false;
      std::string word_str;
      for (const auto& e : word) word_str += (word_str.empty() ? "" : " ") + e;
      exceptions.push_back(label + " cylinder [" + word_str + "]: no single exponent pair fits");
    }
  }
}

}  // namespace

VerificationReport verify(const OrbitMap& map, const VerifyConfig& config) {
  VerificationReport rep;
  rep.depth = config.depth;
  rep.exponent_bound = config.exponent_bound;

  const Graph& E = map.source();
  const Graph& F = map.target();
  rep.complete_enumeration = has_countable_boundary(E) && has_countable_boundary(F);

  auto test_E = exact_points(E, config.depth);
  auto test_F = exact_points(F, config.depth);
  rep.points_checked = test_E.size();

  // Guard disjointness audit: at most one specific rule may claim a point.
  for (const auto& x : test_E) {
    std::size_t claims = 0;
    for (const auto& rule : map.rules())
      if (specific_rule(rule) && rule_guard_matches(E, rule, x)) ++claims;
    if (claims > 1) throw MapError("rule guards overlap at " + to_string(x));
  }

  // (a) bijection between the two enumerations.
  rep.bijective = true;
  std::map<BoundaryPoint, BoundaryPoint> image_of;
  std::set<BoundaryPoint> images;
  std::set<BoundaryPoint> target_set(test_F.begin(), test_F.end());
  for (const auto& x : test_E) {
    BoundaryPoint y = apply_map(map, x);
    auto [it, fresh] = images.insert(y);
    if (!fresh) {
      rep.bijective = false;
      rep.bijectivity_issues.push_back("two points map to " + to_string(y));
      if (!rep.counterexample) {
        rep.counterexample = x;
        rep.failure = "not injective: image " + to_string(y) + " repeats";
      }
    }
    if (!target_set.count(y)) {
      rep.bijective = false;
      rep.bijectivity_issues.push_back("image " + to_string(y) +
                                       " lies outside the target enumeration");
      if (!rep.counterexample) {
        rep.counterexample = x;
        rep.failure = "image " + to_string(y) + " missing from the target enumeration";
      }
    }
    image_of.emplace(x, std::move(y));
  }
  for (const auto& y : test_F) {
    if (!images.count(y)) {
      rep.bijective = false;
      rep.bijectivity_issues.push_back("target point " + to_string(y) + " is not hit");
      if (!rep.counterexample) {
        rep.counterexample = y;
        rep.failure = "not surjective: " + to_string(y) + " has no preimage";
      }
    }
  }

  OrbitMap inv = invert_map(map);

  // (b) the two orbit conditions.
  rep.forward_exponents_ok = check_direction(map, test_E, config.exponent_bound,
                                             rep.forward_witnesses, rep.counterexample,
                                             rep.failure);
  rep.backward_exponents_ok = check_direction(inv, test_F, config.exponent_bound,
                                              rep.backward_witnesses, rep.counterexample,
                                              rep.failure);

  // (c) continuity proxy on both sides.
  rep.continuity_ok = true;
  check_continuity(map, test_E, config.depth, config.exponent_bound, "source", rep.continuity_ok,
                   rep.continuity_exceptions);
  check_continuity(inv, test_F, config.depth, config.exponent_bound, "target", rep.continuity_ok,
                   rep.continuity_exceptions);
  if (!rep.continuity_ok && !rep.counterexample) {
    rep.failure = "exponents are not constant on a cylinder: " + rep.continuity_exceptions.front();
  }

  PeriodicPreservation pp = preserves_periodic_points(map, config.depth);
  rep.periodic_points_preserved = pp.preserved;
  rep.periodic_witness = pp.witness;

  return rep;
}

VerificationReport verify(const Graph& source, const Graph& target, const OrbitMap& map,
                          const VerifyConfig& config) {
  if (!(source == map.source()) || !(target == map.target()))
    throw MapError("the given graphs are not the endpoints of the map");
  return verify(map, config);
}

PeriodicPreservation preserves_periodic_points(const OrbitMap& map, std::size_t depth) {
  PeriodicPreservation res;
  res.preserved = true;
  OrbitMap inv = invert_map(map);
  auto run_side = [&res, depth](const OrbitMap& m, const std::string& side) {
    for (const auto& x : exact_points(m.source(), depth)) {
      auto iso = is_isolated(m.source(), x);
      if (!iso || !*iso) continue;
      ++res.points_checked;
      BoundaryPoint y = apply_map(m, x);
      bool px = x.kind() == BoundaryPoint::Kind::EventuallyPeriodic;
      bool py = y.kind() == BoundaryPoint::Kind::EventuallyPeriodic;
      if (px != py && res.preserved) {
        res.preserved = false;
        res.witness = x;
        res.side = side;
      }
    }
  };
  run_side(map, "forward");
  run_side(inv, "backward");
  return res;
}

}  // namespace oegraph
