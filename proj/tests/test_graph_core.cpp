#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oegraph/errors.hpp"
#include "oegraph/graph.hpp"
#include "oegraph/graph_io.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace oegraph;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("corpus is canonical, small, and mirrored on disk") {
  CHECK(corpus::names().size() >= 20);
  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    CHECK(g.vertices().size() <= 8);
    CHECK(serialize_graph(g) == corpus::texts().at(name));
    CHECK(slurp(corpus::data_path(name)) == corpus::texts().at(name));
  }
}

TEST_CASE("construction rejects bad parts with every diagnostic at once") {
  GraphParts parts;
  parts.vertices = {"u", "u"};
  parts.edges = {{"e", "u", "ghost"}, {"e", "nowhere", "u"}};
  auto issues = validate(parts);
  REQUIRE(issues.size() >= 3);
  try {
    Graph::from_parts(parts);
    FAIL("expected GraphError");
  } catch (const GraphError& e) {
    const std::string what = e.what();
    CHECK(contains(what, "u"));
    CHECK(contains(what, "ghost"));
    CHECK(contains(what, "nowhere"));
    CHECK(contains(what, "duplicate"));
  }
}

TEST_CASE("accessors resolve edges and degrees") {
  Graph g = corpus::get("isolated_mix");
  CHECK(g.has_vertex("u"));
  CHECK_FALSE(g.has_vertex("zz"));
  CHECK(g.has_edge("f"));
  CHECK(g.edge("g").src == "u");
  CHECK(g.edge("g").dst == "v");
  CHECK_THROWS_AS(g.edge("zz"), GraphError);
  CHECK(g.out_degree("u") == 2);
  CHECK(g.in_degree("v") == 2);
  CHECK(g.is_sink("w"));
  CHECK_FALSE(g.is_sink("v"));
  CHECK(g.sinks() == std::vector<VertexId>{"w"});
}

TEST_CASE("vertex classification splits emitters from sinks") {
  auto fan = classify_vertices(corpus::get("two_sinks_fan"));
  CHECK(fan.regular == std::vector<VertexId>{"r"});
  CHECK(fan.sinks == std::vector<VertexId>{"s1", "s2"});

  auto lone = classify_vertices(corpus::get("single_sink"));
  CHECK(lone.regular.empty());
  CHECK(lone.sinks == std::vector<VertexId>{"v"});

  auto diamond = classify_vertices(corpus::get("acyclic_diamond"));
  CHECK(diamond.regular == std::vector<VertexId>{"a", "b", "s"});
  CHECK(diamond.sinks == std::vector<VertexId>{"t"});
}

TEST_CASE("paths validate composability and expose endpoints") {
  Graph g = corpus::get("path_two_to_sink");
  Path p = Path::of_edges(g, {"p", "q"});
  CHECK(p.source() == "x");
  CHECK(p.range() == "z");
  CHECK(p.length() == 2);
  CHECK(p.drop_first(g).edges() == std::vector<EdgeId>{"q"});
  CHECK(p.drop_last(g).edges() == std::vector<EdgeId>{"p"});
  CHECK_THROWS_AS(Path::of_edges(g, {"q", "p"}), DomainError);
  CHECK_THROWS_AS(Path::at_vertex(g, "nope"), DomainError);

  Path empty = Path::at_vertex(g, "z");
  CHECK(empty.empty());
  CHECK(empty.source() == "z");
  CHECK(empty.concat(g, empty) == empty);
  CHECK(Path::of_edges(g, {"p"}).concat(g, Path::of_edges(g, {"q"})) == p);
}

TEST_CASE("vertex-simple cycle search finds every rotation") {
  auto count = [](const std::string& name) {
    return vertex_simple_cycles(corpus::get(name)).size();
  };
  CHECK(count("single_sink") == 0);
  CHECK(count("acyclic_diamond") == 0);
  CHECK(count("single_loop") == 1);
  CHECK(count("two_loops") == 2);
  CHECK(count("two_cycle") == 2);
  CHECK(count("branch_cycle") == 2);
  CHECK(count("two_petals") == 3);
  CHECK(count("no_exit_three_cycle") == 3);
  CHECK(count("four_cycle_entry") == 4);
  // loops aa, bb plus the two rotations of the 2-cycle ab.ba
  CHECK(count("square_ones") == 4);
  // parallel edges a, a2 double the 2-cycle rotations
  CHECK(count("two_cycle_chord") == 4);

  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    for (const auto& c : vertex_simple_cycles(g)) {
      CHECK(c.path().source() == c.path().range());
      CHECK(c.vertex_simple());
      CHECK(c.is_return_path());
      CHECK(c.length() <= g.vertices().size());
    }
  }
}

TEST_CASE("rotation classes have as many members as vertices on the cycle") {
  Graph g = corpus::get("four_cycle_entry");
  auto cycles = vertex_simple_cycles(g);
  REQUIRE(cycles.size() == 4);
  Cycle canon = canonical_rotation(g, cycles.front());
  for (const auto& c : cycles) CHECK(canonical_rotation(g, c) == canon);
  CHECK(canon.edges() == std::vector<EdgeId>{"e1", "e2", "e3", "e4"});
  CHECK(canon.base() == "b");
}

TEST_CASE("cycle construction flags non-simple traversals") {
  Graph g = corpus::get("two_cycle");
  Cycle twice = Cycle::of(g, Path::of_edges(g, {"a", "b", "a", "b"}));
  CHECK_FALSE(twice.vertex_simple());
  CHECK_FALSE(twice.is_return_path());
  CHECK_THROWS_AS(Cycle::of(g, Path::of_edges(g, {"a"})), DomainError);

  Graph petals = corpus::get("two_petals");
  // x -> w -> w -> x revisits only the base: a return path, not vertex-simple
  Cycle around = Cycle::of(petals, Path::of_edges(petals, {"q2", "p", "q1"}));
  CHECK(around.is_return_path());
  CHECK_FALSE(around.vertex_simple());
}

TEST_CASE("exit detection distinguishes the cycles of the corpus") {
  Graph g = corpus::get("loop_with_exit");
  auto cycles = vertex_simple_cycles(g);
  REQUIRE(cycles.size() == 1);
  CHECK(cycle_has_exit(g, cycles.front()));

  Graph lone = corpus::get("single_loop");
  CHECK_FALSE(cycle_has_exit(lone, vertex_simple_cycles(lone).front()));

  Graph both = corpus::get("two_loops");
  for (const auto& c : vertex_simple_cycles(both)) CHECK(cycle_has_exit(both, c));
}

TEST_CASE("every-cycle-has-an-exit predicate across the corpus") {
  auto cond = [](const std::string& name) {
    return satisfies_condition_L(corpus::get(name));
  };
  CHECK(cond("single_sink"));       // no cycles at all
  CHECK(cond("acyclic_diamond"));
  CHECK(cond("two_loops"));
  CHECK(cond("loop_with_exit"));
  CHECK(cond("branch_cycle"));
  CHECK(cond("two_petals"));
  CHECK(cond("square_ones"));
  CHECK(cond("two_cycle_chord"));
  CHECK_FALSE(cond("single_loop"));
  CHECK_FALSE(cond("loop_with_tail"));
  CHECK_FALSE(cond("two_cycle"));
  CHECK_FALSE(cond("no_exit_three_cycle"));
  CHECK_FALSE(cond("four_cycle_entry"));
  CHECK_FALSE(cond("isolated_mix"));

  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    CHECK(satisfies_condition_L(g) == no_exit_cycle_data(g).cycle_vertices.empty());
  }
}

TEST_CASE("exit-free cycle bookkeeping reports loops or a witness") {
  auto diamond = no_exit_cycle_data(corpus::get("acyclic_diamond"));
  CHECK(diamond.cycle_vertices.empty());
  CHECK(diamond.loops_available());
  CHECK(diamond.loops->empty());

  auto lone = no_exit_cycle_data(corpus::get("single_loop"));
  CHECK(lone.cycle_vertices == std::vector<VertexId>{"v"});
  REQUIRE(lone.loops_available());
  CHECK(lone.loops->at("v") == "f");

  auto mix = no_exit_cycle_data(corpus::get("isolated_mix"));
  CHECK(mix.cycle_vertices == std::vector<VertexId>{"v"});
  REQUIRE(mix.loops_available());
  CHECK(mix.loops->at("v") == "f");

  auto pair = no_exit_cycle_data(corpus::get("two_cycle"));
  CHECK(pair.cycle_vertices == std::vector<VertexId>{"u", "v"});
  CHECK_FALSE(pair.loops_available());
  REQUIRE(pair.non_loop_witness.has_value());
  CHECK(pair.non_loop_witness->length() == 2);

  auto four = no_exit_cycle_data(corpus::get("four_cycle_entry"));
  CHECK(four.cycle_vertices == std::vector<VertexId>{"a", "b", "c", "d"});
  CHECK_FALSE(four.loops_available());

  // with the loop map available, each cycle vertex emits only its loop
  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    auto data = no_exit_cycle_data(g);
    if (!data.loops_available()) continue;
    for (const auto& [v, e] : *data.loops) {
      CHECK(g.out_edges(v) == std::vector<EdgeId>{e});
      CHECK(g.edge(e).dst == v);
    }
  }
}

TEST_CASE("return path listing matches direct walk counting") {
  Graph lone = corpus::get("single_loop");
  auto at_v = return_paths_at(lone, "v");
  REQUIRE(at_v.size() == 1);
  CHECK(at_v.front().edges() == std::vector<EdgeId>{"f"});

  CHECK(return_paths_at(corpus::get("two_loops"), "v").size() == 2);
  for (const auto& v : corpus::get("acyclic_diamond").vertices())
    CHECK(return_paths_at(corpus::get("acyclic_diamond"), v).empty());

  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    for (const auto& v : g.vertices()) {
      CAPTURE(v);
      CHECK(return_paths_at(g, v).size() ==
            oracle::return_walks(g, v, g.vertices().size()));
    }
  }
}

TEST_CASE("countability agrees with the walk-counting oracle on the corpus") {
  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    CHECK(has_countable_boundary(g) == oracle::countable_by_walks(g));
  }
  CHECK(has_countable_boundary(corpus::get("single_loop")));
  CHECK(has_countable_boundary(corpus::get("acyclic_diamond")));
  CHECK(has_countable_boundary(corpus::get("four_cycle_entry")));
  CHECK_FALSE(has_countable_boundary(corpus::get("two_loops")));
  CHECK_FALSE(has_countable_boundary(corpus::get("two_petals")));
  CHECK_FALSE(has_countable_boundary(corpus::get("two_cycle_chord")));
  CHECK_FALSE(has_countable_boundary(corpus::get("square_ones")));
}

TEST_CASE("adjacency matrix counts parallel edges in vertex order") {
  auto lone = adjacency_matrix(corpus::get("single_loop"));
  CHECK(lone.order == std::vector<VertexId>{"v"});
  CHECK(lone.at == std::vector<std::vector<std::int64_t>>{{1}});

  auto twin = adjacency_matrix(corpus::get("two_loops"));
  CHECK(twin.at == std::vector<std::vector<std::int64_t>>{{2}});

  auto arrow = adjacency_matrix(corpus::get("edge_to_sink"));
  CHECK(arrow.order == std::vector<VertexId>{"u", "w"});
  CHECK(arrow.at == std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 0}});

  for (const auto& name : corpus::names()) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    auto m = adjacency_matrix(g);
    std::int64_t total = 0;
    for (const auto& row : m.at)
      for (auto x : row) {
        CHECK(x >= 0);
        total += x;
      }
    CHECK(total == static_cast<std::int64_t>(g.edges().size()));
  }
}

TEST_CASE("isomorphism search finds witnesses and honest refusals") {
  Graph four = corpus::get("four_cycle_entry");
  auto self = find_isomorphism(four, four);
  REQUIRE(self.found());
  for (const auto& [a, b] : self.vertex_map) CHECK(a == b);

  CHECK_FALSE(find_isomorphism(corpus::get("single_loop"), corpus::get("single_sink")).found());
  CHECK_FALSE(find_isomorphism(corpus::get("two_loops"), corpus::get("single_loop")).found());

  // relabeled four-cycle: same shape, scrambled names
  Graph relabeled = parse_graph_text(
      "v n1\nv n2\nv n3\nv n4\nv n5\n"
      "e k1 n2 n3\ne k2 n3 n1\ne k3 n1 n4\ne k4 n4 n2\ne k5 n5 n2\n",
      "relabeled");
  auto wit = find_isomorphism(four, relabeled);
  REQUIRE(wit.found());
  CHECK(wit.vertex_map.at("t") == "n5");
  CHECK(wit.vertex_map.at("a") == "n1");
  // the witness respects endpoints edge by edge
  for (const auto& [e, f] : wit.edge_map) {
    CHECK(wit.vertex_map.at(four.edge(e).src) == relabeled.edge(f).src);
    CHECK(wit.vertex_map.at(four.edge(e).dst) == relabeled.edge(f).dst);
  }

  // parallel edges still need a full bijection
  auto chord = find_isomorphism(corpus::get("two_cycle_chord"), corpus::get("two_cycle"));
  CHECK_FALSE(chord.found());

  GraphParts big;
  for (int i = 0; i < 13; ++i) big.vertices.push_back("v" + std::to_string(i));
  Graph wide = Graph::from_parts(big);
  CHECK(find_isomorphism(wide, wide).status == IsomorphismResult::Status::TooLarge);
}

TEST_CASE("parser reports line numbers and serialization round trips") {
  Graph g = parse_graph_text("v u\nv w\ne g u w\n");
  CHECK(g.vertices().size() == 2);
  CHECK(g.edges().size() == 1);

  try {
    parse_graph_text("e g u w\n", "bad.graph");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(contains(e.what(), "bad.graph"));
    CHECK(contains(e.what(), "u"));
  }

  try {
    parse_graph_text("v u\nq oops\n", "odd.graph");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(contains(e.what(), "odd.graph:2"));
  }

  try {
    parse_graph_text("v  u\n", "spaced.graph");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(contains(e.what(), "single spaces"));
  }

  // comments and blank lines are skipped; reparse is the identity
  Graph h = parse_graph_text("# a comment\n\nv u\n# another\nv w\ne g u w\n");
  CHECK(h == g);
  CHECK(parse_graph_text(serialize_graph(h)) == h);
}

TEST_CASE("dot export names every vertex and edge") {
  std::string dot = to_dot(corpus::get("edge_to_sink"), "arrow");
  CHECK(contains(dot, "digraph \"arrow\""));
  CHECK(contains(dot, "\"u\" -> \"w\" [label=\"g\"]"));
  CHECK(contains(dot, "doublecircle"));  // sink marker
}
