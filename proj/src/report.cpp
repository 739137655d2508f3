#include "oegraph/report.hpp"

#include <cstdint>

#include "oegraph/errors.hpp"
#include "oegraph/graph_io.hpp"

namespace oegraph {

using nlohmann::json;

std::string digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string graph_digest(const Graph& g) { return digest(serialize_graph(g)); }

json encode_point(const BoundaryPoint& p) {
  json j;
  j["at"] = p.prefix().source();
  switch (p.kind()) {
    case BoundaryPoint::Kind::FiniteToSink:
      j["kind"] = "finite";
      j["edges"] = p.prefix().edges();
      break;
    case BoundaryPoint::Kind::EventuallyPeriodic:
      j["kind"] = "eventually-periodic";
      j["prefix"] = p.prefix().edges();
      j["cycle"] = p.cycle().edges();
      break;
    case BoundaryPoint::Kind::TruncatedInfinite:
      j["kind"] = "truncated";
      j["edges"] = p.prefix().edges();
      break;
  }
  return j;
}

namespace {

Path decode_path(const Graph& g, const json& j, const std::string& at) {
  std::vector<EdgeId> edges = j.get<std::vector<EdgeId>>();
  Path p = edges.empty() ? Path::at_vertex(g, at) : Path::of_edges(g, std::move(edges));
  if (p.source() != at)
    throw IoError("point starts at '" + p.source() + "', declared '" + at + "'");
  return p;
}

}  // namespace

BoundaryPoint decode_point(const Graph& g, const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("at"))
    throw IoError("point record needs 'kind' and 'at' fields");
  const std::string kind = j.at("kind").get<std::string>();
  const std::string at = j.at("at").get<std::string>();
  try {
    if (kind == "finite")
      return BoundaryPoint::finite(g, decode_path(g, j.at("edges"), at));
    if (kind == "eventually-periodic") {
      Path mu = decode_path(g, j.at("prefix"), at);
      Path nu = Path::of_edges(g, j.at("cycle").get<std::vector<EdgeId>>());
      return BoundaryPoint::eventually_periodic(g, std::move(mu), std::move(nu));
    }
    if (kind == "truncated")
      return BoundaryPoint::truncated(g, decode_path(g, j.at("edges"), at));
  } catch (const DomainError& e) {
    throw IoError(std::string("bad point record: ") + e.what());
  } catch (const GraphError& e) {
    throw IoError(std::string("bad point record: ") + e.what());
  }
  throw IoError("unknown point kind '" + kind + "'");
}

json encode_cycle(const Cycle& c) {
  json j;
  j["base"] = c.base();
  j["edges"] = c.path().edges();
  return j;
}

namespace {

json encode_cocycle(const CocycleFn& fn) {
  json arr = json::array();
  for (const auto& c : fn) {
    json jc;
    if (c.guard) {
      json g = json::array();
      for (const auto& p : *c.guard) g.push_back(encode_point(p));
      jc["guard"] = g;
    }
    switch (c.formula) {
      case CocycleCase::Formula::Constant:
        jc["formula"] = "constant";
        jc["value"] = c.value;
        break;
      case CocycleCase::Formula::LengthPlus:
        jc["formula"] = "length-plus";
        jc["value"] = c.value;
        break;
      case CocycleCase::Formula::Table: {
        jc["formula"] = "table";
        json t = json::array();
        for (const auto& [p, v] : c.table) t.push_back({{"point", encode_point(p)}, {"value", v}});
        jc["table"] = t;
        break;
      }
    }
    arr.push_back(jc);
  }
  return arr;
}

CocycleFn decode_cocycle(const Graph& g, const json& arr) {
  CocycleFn fn;
  for (const auto& jc : arr) {
    CocycleCase c;
    if (jc.contains("guard")) {
      std::set<BoundaryPoint> guard;
      for (const auto& jp : jc.at("guard")) guard.insert(decode_point(g, jp));
      c.guard = std::move(guard);
    }
    const std::string f = jc.at("formula").get<std::string>();
    if (f == "constant") {
      c.formula = CocycleCase::Formula::Constant;
      c.value = jc.at("value").get<long>();
    } else if (f == "length-plus") {
      c.formula = CocycleCase::Formula::LengthPlus;
      c.value = jc.at("value").get<long>();
    } else if (f == "table") {
      c.formula = CocycleCase::Formula::Table;
      for (const auto& e : jc.at("table"))
        c.table[decode_point(g, e.at("point"))] = e.at("value").get<std::size_t>();
    } else {
      throw IoError("unknown cocycle formula '" + f + "'");
    }
    fn.push_back(std::move(c));
  }
  return fn;
}

json encode_rules(const OrbitMap& m);

json encode_rule(const MapRule& rule) {
  json j;
  if (std::holds_alternative<RuleIdentity>(rule)) {
    j["rule"] = "identity";
  } else if (const auto* ft = std::get_if<RuleFiniteTable>(&rule)) {
    j["rule"] = "finite-table";
    json entries = json::array();
    for (const auto& [from, to] : ft->entries)
      entries.push_back({{"from", encode_point(from)}, {"to", encode_point(to)}});
    j["entries"] = entries;
  } else if (const auto* ap = std::get_if<RuleAppendLoopTail>(&rule)) {
    j["rule"] = "append-loop-tail";
    j["loops"] = ap->loops;
  } else if (const auto* st = std::get_if<RuleStripLoopTail>(&rule)) {
    j["rule"] = "strip-loop-tail";
    j["loops"] = st->loops;
  } else if (const auto* ch = std::get_if<RuleChain>(&rule)) {
    j["rule"] = "chain";
    j["via"] = serialize_graph(ch->inner->target());
    j["inner"] = encode_rules(*ch->inner);
    j["outer"] = encode_rules(*ch->outer);
  }
  return j;
}

// The rule list plus declared cocycles, without the envelope; chain rules
// nest this same shape.
json encode_rules(const OrbitMap& m) {
  json j;
  json rules = json::array();
  for (const auto& r : m.rules()) rules.push_back(encode_rule(r));
  j["rules"] = rules;
  const DeclaredCocycles& cc = m.cocycles();
  json jcc;
  jcc["l"] = cc.l ? encode_cocycle(*cc.l) : json();
  jcc["m"] = cc.m ? encode_cocycle(*cc.m) : json();
  jcc["l-prime"] = cc.l_prime ? encode_cocycle(*cc.l_prime) : json();
  jcc["m-prime"] = cc.m_prime ? encode_cocycle(*cc.m_prime) : json();
  j["cocycles"] = jcc;
  return j;
}

OrbitMap decode_rules(const json& j, const Graph& source, const Graph& target) {
  std::vector<MapRule> rules;
  for (const auto& jr : j.at("rules")) {
    const std::string kind = jr.at("rule").get<std::string>();
    if (kind == "identity") {
      rules.push_back(RuleIdentity{});
    } else if (kind == "finite-table") {
      RuleFiniteTable ft;
      for (const auto& e : jr.at("entries"))
        ft.entries.emplace_back(decode_point(source, e.at("from")),
                                decode_point(target, e.at("to")));
      rules.push_back(std::move(ft));
    } else if (kind == "append-loop-tail") {
      rules.push_back(RuleAppendLoopTail{jr.at("loops").get<std::map<VertexId, EdgeId>>()});
    } else if (kind == "strip-loop-tail") {
      rules.push_back(RuleStripLoopTail{jr.at("loops").get<std::map<VertexId, EdgeId>>()});
    } else if (kind == "chain") {
      Graph via = parse_graph_text(jr.at("via").get<std::string>(), "<chain rule>");
      auto inner = std::make_shared<OrbitMap>(decode_rules(jr.at("inner"), source, via));
      auto outer = std::make_shared<OrbitMap>(decode_rules(jr.at("outer"), via, target));
      rules.push_back(RuleChain{std::move(inner), std::move(outer)});
    } else {
      throw IoError("unknown rule kind '" + kind + "'");
    }
  }
  DeclaredCocycles cc;
  if (j.contains("cocycles")) {
    const json& jcc = j.at("cocycles");
    auto grab = [&](const char* key, const Graph& g) -> std::optional<CocycleFn> {
      if (!jcc.contains(key) || jcc.at(key).is_null()) return std::nullopt;
      return decode_cocycle(g, jcc.at(key));
    };
    cc.l = grab("l", source);
    cc.m = grab("m", source);
    cc.l_prime = grab("l-prime", target);
    cc.m_prime = grab("m-prime", target);
  }
  try {
    return OrbitMap(source, target, std::move(rules), std::move(cc));
  } catch (const MapError& e) {
    throw IoError(std::string("map file rejected: ") + e.what());
  }
}

}  // namespace

json encode_map(const OrbitMap& m) {
  json j = encode_rules(m);
  j["schema"] = kMapSchema;
  j["source-digest"] = graph_digest(m.source());
  j["target-digest"] = graph_digest(m.target());
  return j;
}

OrbitMap decode_map(const json& j, const Graph& source, const Graph& target) {
  if (!j.is_object() || j.value("schema", "") != kMapSchema)
    throw IoError(std::string("expected a '") + kMapSchema + "' document");
  if (j.contains("source-digest") && j.at("source-digest") != graph_digest(source))
    throw IoError("map file was built for a different source graph");
  if (j.contains("target-digest") && j.at("target-digest") != graph_digest(target))
    throw IoError("map file was built for a different target graph");
  return decode_rules(j, source, target);
}

namespace {

json encode_witness(const ExponentWitness& w) {
  return {{"point", encode_point(w.x)},
          {"l", w.l},
          {"m", w.m},
          {"declared", w.declared}};
}

}  // namespace

json encode_verification(const VerificationReport& r) {
  json j;
  j["depth"] = r.depth;
  j["exponent-bound"] = r.exponent_bound;
  j["complete-enumeration"] = r.complete_enumeration;
  j["points-checked"] = r.points_checked;
  j["bijective"] = r.bijective;
  j["bijectivity-issues"] = r.bijectivity_issues;
  j["forward-exponents-ok"] = r.forward_exponents_ok;
  j["backward-exponents-ok"] = r.backward_exponents_ok;
  json fw = json::array(), bw = json::array();
  for (const auto& w : r.forward_witnesses) fw.push_back(encode_witness(w));
  for (const auto& w : r.backward_witnesses) bw.push_back(encode_witness(w));
  j["forward-witnesses"] = fw;
  j["backward-witnesses"] = bw;
  j["continuity-ok"] = r.continuity_ok;
  j["continuity-exceptions"] = r.continuity_exceptions;
  j["pass"] = r.pass();
  if (r.counterexample) j["counterexample"] = encode_point(*r.counterexample);
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (r.periodic_points_preserved) {
    j["periodic-points-preserved"] = *r.periodic_points_preserved;
    if (r.periodic_witness) j["periodic-witness"] = encode_point(*r.periodic_witness);
  }
  return j;
}

json encode_bowen_franks(const BowenFranksData& bf) {
  json j;
  json divs = json::array();
  for (const auto& d : bf.elementary_divisors) divs.push_back(d.str());
  j["elementary-divisors"] = divs;
  j["free-rank"] = bf.free_rank;
  j["det-i-minus-a"] = bf.det_i_minus_a.str();
  j["display"] = to_string(bf);
  return j;
}

json Report::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command;
  json in = json::array();
  for (const auto& [label, d] : inputs) in.push_back({{"input", label}, {"digest", d}});
  j["inputs"] = in;
  j["status"] = status;
  j["result"] = result;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace oegraph
