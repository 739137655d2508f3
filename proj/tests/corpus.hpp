#pragma once

#include <map>
#include <string>
#include <vector>

#include "oegraph/graph_io.hpp"

// Hand-built graphs used across the suite, each at most 8 vertices.  The
// texts are canonical (sorted vertices, then sorted edges) so serialization
// round-trips byte-identically; tests/data mirrors them as files for the
// command-line golden tests.
namespace corpus {

inline const std::map<std::string, std::string>& texts() {
  static const std::map<std::string, std::string> t = {
      {"single_sink", "v v\n"},
      {"single_loop",
       "v v\n"
       "e f v v\n"},
      {"two_loops",
       "v v\n"
       "e e v v\n"
       "e f v v\n"},
      {"three_loops",
       "v v\n"
       "e e v v\n"
       "e f v v\n"
       "e g v v\n"},
      {"edge_to_sink",
       "v u\n"
       "v w\n"
       "e g u w\n"},
      {"loop_with_tail",
       "v u\n"
       "v v\n"
       "e f v v\n"
       "e g u v\n"},
      {"loop_with_exit",
       "v v\n"
       "v w\n"
       "e d v w\n"
       "e f v v\n"},
      {"two_cycle",
       "v u\n"
       "v v\n"
       "e a u v\n"
       "e b v u\n"},
      {"two_disjoint_two_cycles",
       "v u1\n"
       "v u2\n"
       "v v1\n"
       "v v2\n"
       "e a1 u1 v1\n"
       "e a2 u2 v2\n"
       "e b1 v1 u1\n"
       "e b2 v2 u2\n"},
      {"path_two_to_sink",
       "v x\n"
       "v y\n"
       "v z\n"
       "e p x y\n"
       "e q y z\n"},
      {"square_ones",
       "v p\n"
       "v q\n"
       "e aa p p\n"
       "e ab p q\n"
       "e ba q p\n"
       "e bb q q\n"},
      {"two_sinks_fan",
       "v r\n"
       "v s1\n"
       "v s2\n"
       "e c1 r s1\n"
       "e c2 r s2\n"},
      {"branch_cycle",
       "v u\n"
       "v v\n"
       "v w\n"
       "e a u v\n"
       "e b v u\n"
       "e c v w\n"},
      {"double_tail_loop",
       "v t1\n"
       "v t2\n"
       "v v\n"
       "e f v v\n"
       "e g1 t1 t2\n"
       "e g2 t2 v\n"},
      {"two_loops_tail",
       "v u\n"
       "v v\n"
       "e e v v\n"
       "e f v v\n"
       "e g u v\n"},
      {"two_petals",
       "v w\n"
       "v x\n"
       "e p w w\n"
       "e q1 w x\n"
       "e q2 x w\n"},
      {"no_exit_three_cycle",
       "v x\n"
       "v y\n"
       "v z\n"
       "e c1 x y\n"
       "e c2 y z\n"
       "e c3 z x\n"},
      {"acyclic_diamond",
       "v a\n"
       "v b\n"
       "v s\n"
       "v t\n"
       "e d1 s a\n"
       "e d2 s b\n"
       "e d3 a t\n"
       "e d4 b t\n"},
      {"isolated_mix",
       "v u\n"
       "v v\n"
       "v w\n"
       "e f v v\n"
       "e g u v\n"
       "e h u w\n"},
      {"two_cycle_chord",
       "v u\n"
       "v v\n"
       "e a u v\n"
       "e a2 u v\n"
       "e b v u\n"},
      {"four_cycle_entry",
       "v a\n"
       "v b\n"
       "v c\n"
       "v d\n"
       "v t\n"
       "e e1 b c\n"
       "e e2 c a\n"
       "e e3 a d\n"
       "e e4 d b\n"
       "e in t b\n"},
      {"four_cycle_canonical",
       "v a\n"
       "v b\n"
       "v c\n"
       "v d\n"
       "v t\n"
       "e cyc_a a a\n"
       "e e1 b c\n"
       "e e2 c a\n"
       "e e4 d b\n"
       "e in t b\n"},
  };
  return t;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : texts()) out.push_back(name);
  return out;
}

inline oegraph::Graph get(const std::string& name) {
  return oegraph::parse_graph_text(texts().at(name), name);
}

inline std::string data_path(const std::string& name) {
  return std::string(OEGRAPH_TEST_DATA_DIR) + "/" + name + ".graph";
}

}  // namespace corpus
