#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oegraph/invariants.hpp"
#include "oegraph/moves.hpp"

namespace oegraph {

inline constexpr const char* kToolName = "oegraph";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "oegraph.report/1";
inline constexpr const char* kMapSchema = "oegraph.map/1";

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string digest(const std::string& data);
std::string graph_digest(const Graph& g);

nlohmann::json encode_point(const BoundaryPoint& p);
BoundaryPoint decode_point(const Graph& g, const nlohmann::json& j);

nlohmann::json encode_cycle(const Cycle& c);
nlohmann::json encode_verification(const VerificationReport& r);
nlohmann::json encode_bowen_franks(const BowenFranksData& bf);

// Map files: { schema, source-digest, target-digest, rules, cocycles }.
// The graphs themselves travel separately; decode checks the digests.
nlohmann::json encode_map(const OrbitMap& m);
OrbitMap decode_map(const nlohmann::json& j, const Graph& source, const Graph& target);

/*
 * Envelope for every command's structured output.  Serialization sorts all
 * object keys, so identical inputs and flags give byte-identical documents.
 */
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // label -> digest
  std::string status;
  nlohmann::json result;

  nlohmann::json to_json() const;
  std::string dump() const;  // two-space indent, trailing newline
};

}  // namespace oegraph
