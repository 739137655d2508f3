#include "oegraph/orbit_map.hpp"

#include <algorithm>

namespace oegraph {

namespace {

// Re-roots a symbolic point in another graph, revalidating structure
// (edges present and composable, finite range a sink).
BoundaryPoint transfer_point(const Graph& to, const BoundaryPoint& p) {
  try {
    auto rebuild = [&to](const Path& path) {
      if (path.length() == 0) return Path::at_vertex(to, path.source());
      return Path::of_edges(to, path.edges());
    };
    switch (p.kind()) {
      case BoundaryPoint::Kind::FiniteToSink:
        return BoundaryPoint::finite(to, rebuild(p.prefix()));
      case BoundaryPoint::Kind::EventuallyPeriodic:
        return BoundaryPoint::eventually_periodic(to, rebuild(p.prefix()), rebuild(p.cycle()));
      case BoundaryPoint::Kind::TruncatedInfinite:
        break;
    }
  } catch (const Error& err) {
    throw MapError("point " + to_string(p) + " does not transfer: " + err.what());
  }
  throw MapError("cannot transfer a truncated marker");
}

const RuleFiniteTable* pure_table(const OrbitMap& map) {
  const auto& rules = map.rules();
  if (rules.size() == 2 && std::holds_alternative<RuleIdentity>(rules[1]))
    return std::get_if<RuleFiniteTable>(&rules[0]);
  return nullptr;
}

const RuleAppendLoopTail* append_with_fallback(const OrbitMap& map) {
  const auto& rules = map.rules();
  if (rules.size() == 2 && std::holds_alternative<RuleIdentity>(rules[1]))
    return std::get_if<RuleAppendLoopTail>(&rules[0]);
  return nullptr;
}

const RuleStripLoopTail* strip_with_fallback(const OrbitMap& map) {
  const auto& rules = map.rules();
  if (rules.size() == 2 && std::holds_alternative<RuleIdentity>(rules[1]))
    return std::get_if<RuleStripLoopTail>(&rules[0]);
  return nullptr;
}

}  // namespace

std::size_t evaluate_cocycle(const CocycleFn& fn, const BoundaryPoint& x) {
  for (const auto& c : fn) {
    if (c.guard && !c.guard->count(x)) continue;
    switch (c.formula) {
      case CocycleCase::Formula::Constant:
        if (c.value < 0) throw MapError("declared exponent is negative");
        return static_cast<std::size_t>(c.value);
      case CocycleCase::Formula::LengthPlus: {
        auto len = x.length();
        if (!len) throw MapError("length formula on the infinite point " + to_string(x));
        long v = static_cast<long>(*len) + c.value;
        if (v < 0) throw MapError("declared exponent is negative at " + to_string(x));
        return static_cast<std::size_t>(v);
      }
      case CocycleCase::Formula::Table: {
        auto it = c.table.find(x);
        if (it == c.table.end())
          throw MapError("exponent table has no entry for " + to_string(x));
        return it->second;
      }
    }
  }
  throw MapError("declared exponent undefined at " + to_string(x));
}

OrbitMap::OrbitMap(Graph source, Graph target, std::vector<MapRule> rules,
                   DeclaredCocycles cocycles)
    : source_(std::move(source)),
      target_(std::move(target)),
      rules_(std::move(rules)),
      cocycles_(std::move(cocycles)) {
  if (rules_.empty()) throw MapError("a map needs at least one rule");
  for (auto& rule : rules_) {
    if (auto* ft = std::get_if<RuleFiniteTable>(&rule)) {
      std::sort(ft->entries.begin(), ft->entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < ft->entries.size(); ++i)
        if (ft->entries[i - 1].first == ft->entries[i].first)
          throw MapError("table lists " + to_string(ft->entries[i].first) + " twice");
    } else if (auto* ap = std::get_if<RuleAppendLoopTail>(&rule)) {
      for (const auto& [v, e] : ap->loops) {
        if (!source_.has_vertex(v)) throw MapError("append rule names unknown vertex '" + v + "'");
        if (!target_.has_edge(e)) throw MapError("append rule names unknown edge '" + e + "'");
        const Edge& loop = target_.edge(e);
        if (loop.src != v || loop.dst != v)
          throw MapError("edge '" + e + "' is not a loop at '" + v + "' in the target");
      }
    } else if (auto* st = std::get_if<RuleStripLoopTail>(&rule)) {
      for (const auto& [v, e] : st->loops) {
        if (!target_.has_vertex(v)) throw MapError("strip rule names unknown vertex '" + v + "'");
        if (!source_.has_edge(e)) throw MapError("strip rule names unknown edge '" + e + "'");
        const Edge& loop = source_.edge(e);
        if (loop.src != v || loop.dst != v)
          throw MapError("edge '" + e + "' is not a loop at '" + v + "' in the source");
      }
    } else if (auto* ch = std::get_if<RuleChain>(&rule)) {
      if (!ch->inner || !ch->outer) throw MapError("chain rule with missing halves");
      if (!(ch->inner->target() == ch->outer->source()))
        throw MapError("chain halves do not meet in the middle graph");
      if (!(ch->inner->source() == source_) || !(ch->outer->target() == target_))
        throw MapError("chain halves disagree with the declared end graphs");
    }
  }
}

bool OrbitMap::pure_identity() const {
  return rules_.size() == 1 && std::holds_alternative<RuleIdentity>(rules_[0]);
}

OrbitMap identity_map(const Graph& g) {
  DeclaredCocycles cc;
  CocycleCase one;
  one.formula = CocycleCase::Formula::Constant;
  one.value = 1;
  CocycleCase zero;
  zero.formula = CocycleCase::Formula::Constant;
  zero.value = 0;
  cc.l = CocycleFn{one};
  cc.m = CocycleFn{zero};
  cc.l_prime = CocycleFn{one};
  cc.m_prime = CocycleFn{zero};
  return OrbitMap(g, g, {RuleIdentity{}}, std::move(cc));
}

bool rule_guard_matches(const Graph& source, const MapRule& rule, const BoundaryPoint& p) {
  (void)source;
  if (std::holds_alternative<RuleIdentity>(rule) || std::holds_alternative<RuleChain>(rule))
    return true;
  if (const auto* ft = std::get_if<RuleFiniteTable>(&rule)) {
    return std::any_of(ft->entries.begin(), ft->entries.end(),
                       [&p](const auto& kv) { return kv.first == p; });
  }
  if (const auto* ap = std::get_if<RuleAppendLoopTail>(&rule)) {
    return p.kind() == BoundaryPoint::Kind::FiniteToSink && ap->loops.count(p.prefix().range()) > 0;
  }
  if (const auto* st = std::get_if<RuleStripLoopTail>(&rule)) {
    if (p.kind() != BoundaryPoint::Kind::EventuallyPeriodic || p.cycle().length() != 1) return false;
    auto it = st->loops.find(p.cycle().source());
    return it != st->loops.end() && it->second == p.cycle().edges().front();
  }
  return false;
}

BoundaryPoint apply_map(const OrbitMap& map, const BoundaryPoint& p) {
  if (!p.exact()) throw MapError("cannot apply a map to a truncated marker");
  for (const auto& rule : map.rules()) {
    if (const auto* ft = std::get_if<RuleFiniteTable>(&rule)) {
      auto it = std::lower_bound(ft->entries.begin(), ft->entries.end(), p,
                                 [](const auto& kv, const BoundaryPoint& q) { return kv.first < q; });
      if (it != ft->entries.end() && it->first == p) return it->second;
      continue;
    }
    if (const auto* ap = std::get_if<RuleAppendLoopTail>(&rule)) {
      if (!rule_guard_matches(map.source(), rule, p)) continue;
      const EdgeId& loop = ap->loops.at(p.prefix().range());
      Path prefix = p.prefix().length() ? Path::of_edges(map.target(), p.prefix().edges())
                                        : Path::at_vertex(map.target(), p.prefix().range());
      return BoundaryPoint::eventually_periodic(map.target(), prefix,
                                                Path::of_edges(map.target(), {loop}));
    }
    if (std::get_if<RuleStripLoopTail>(&rule)) {
      if (!rule_guard_matches(map.source(), rule, p)) continue;
      Path prefix = p.prefix().length() ? Path::of_edges(map.target(), p.prefix().edges())
                                        : Path::at_vertex(map.target(), p.prefix().range());
      return BoundaryPoint::finite(map.target(), prefix);
    }
    if (const auto* ch = std::get_if<RuleChain>(&rule)) {
      return apply_map(*ch->outer, apply_map(*ch->inner, p));
    }
    return transfer_point(map.target(), p);  // RuleIdentity
  }
  throw MapError("no rule matches " + to_string(p));
}

OrbitMap invert_map(const OrbitMap& map) {
  std::vector<MapRule> rules;
  for (const auto& rule : map.rules()) {
    if (std::holds_alternative<RuleIdentity>(rule)) {
      rules.push_back(RuleIdentity{});
    } else if (const auto* ft = std::get_if<RuleFiniteTable>(&rule)) {
      RuleFiniteTable inv;
      for (const auto& [from, to] : ft->entries) inv.entries.emplace_back(to, from);
      std::sort(inv.entries.begin(), inv.entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < inv.entries.size(); ++i)
        if (inv.entries[i - 1].first == inv.entries[i].first)
          throw MapError("table is not injective at " + to_string(inv.entries[i].first));
      rules.push_back(std::move(inv));
    } else if (const auto* ap = std::get_if<RuleAppendLoopTail>(&rule)) {
      rules.push_back(RuleStripLoopTail{ap->loops});
    } else if (const auto* st = std::get_if<RuleStripLoopTail>(&rule)) {
      rules.push_back(RuleAppendLoopTail{st->loops});
    } else {
      const auto& ch = std::get<RuleChain>(rule);
      rules.push_back(RuleChain{std::make_shared<const OrbitMap>(invert_map(*ch.outer)),
                                std::make_shared<const OrbitMap>(invert_map(*ch.inner))});
    }
  }
  DeclaredCocycles cc;
  cc.l = map.cocycles().l_prime;
  cc.m = map.cocycles().m_prime;
  cc.l_prime = map.cocycles().l;
  cc.m_prime = map.cocycles().m;
  return OrbitMap(map.target(), map.source(), std::move(rules), std::move(cc));
}

OrbitMap compose_maps(const OrbitMap& outer, const OrbitMap& inner) {
  if (!(inner.target() == outer.source()))
    throw MapError("maps do not compose: inner target differs from outer source");

  if (inner.pure_identity())
    return OrbitMap(inner.source(), outer.target(), outer.rules(), outer.cocycles());
  if (outer.pure_identity())
    return OrbitMap(inner.source(), outer.target(), inner.rules(), inner.cocycles());

  // Round trips of the loop moves cancel to the identity.
  if (const auto* ap = append_with_fallback(inner)) {
    if (const auto* st = strip_with_fallback(outer)) {
      if (ap->loops == st->loops && inner.source() == outer.target())
        return identity_map(inner.source());
    }
  }
  if (const auto* st = strip_with_fallback(inner)) {
    if (const auto* ap = append_with_fallback(outer)) {
      if (st->loops == ap->loops && inner.source() == outer.target())
        return identity_map(inner.source());
    }
  }

  if (const auto* tin = pure_table(inner)) {
    if (const auto* tout = pure_table(outer)) {
      std::set<BoundaryPoint> keys;
      for (const auto& [from, to] : tin->entries) keys.insert(from);
      for (const auto& [from, to] : tout->entries) keys.insert(from);
      auto look = [](const RuleFiniteTable& t, const BoundaryPoint& p,
                     const Graph& fallback) -> BoundaryPoint {
        for (const auto& [from, to] : t.entries)
          if (from == p) return to;
        return transfer_point(fallback, p);
      };
      RuleFiniteTable combined;
      for (const auto& x : keys) {
        BoundaryPoint mid = look(*tin, x, inner.target());
        BoundaryPoint out = look(*tout, mid, outer.target());
        if (!(out == x)) combined.entries.emplace_back(x, out);
      }
      return OrbitMap(inner.source(), outer.target(),
                      {std::move(combined), RuleIdentity{}});
    }
  }

  return OrbitMap(inner.source(), outer.target(),
                  {RuleChain{std::make_shared<const OrbitMap>(inner),
                             std::make_shared<const OrbitMap>(outer)}});
}

}  // namespace oegraph
