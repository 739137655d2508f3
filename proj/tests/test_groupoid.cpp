#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oegraph/boundary.hpp"
#include "oegraph/errors.hpp"
#include "oegraph/groupoid.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace oegraph;

namespace {

BoundaryPoint ep(const Graph& g, std::vector<EdgeId> mu_edges, const VertexId& mu_src,
                 std::vector<EdgeId> nu_edges) {
  Path mu = mu_edges.empty() ? Path::at_vertex(g, mu_src) : Path::of_edges(g, std::move(mu_edges));
  return BoundaryPoint::eventually_periodic(g, mu, Path::of_edges(g, std::move(nu_edges)));
}

// Rebuilds the depth-bounded element set from scratch: every exact point pair
// from the enumeration, every witness pair up to the depth, equality checked
// by the word-window oracle instead of the library's shift.
std::set<std::tuple<BoundaryPoint, std::int64_t, BoundaryPoint>> elements_by_words(
    const Graph& g, std::size_t depth) {
  std::vector<BoundaryPoint> pts;
  for (const auto& p : enumerate_boundary(g, depth))
    if (p.exact()) pts.push_back(p);
  std::set<std::tuple<BoundaryPoint, std::int64_t, BoundaryPoint>> out;
  for (const auto& x : pts)
    for (const auto& y : pts)
      for (std::size_t m = 0; m <= depth; ++m) {
        if (!x.length_at_least(m)) continue;
        for (std::size_t n = 0; n <= depth; ++n) {
          if (!y.length_at_least(n)) continue;
          if (oracle::same_point_by_words(g, shift_n(g, x, m), shift_n(g, y, n)))
            out.insert({x, std::int64_t(m) - std::int64_t(n), y});
        }
      }
  return out;
}

}  // namespace

TEST_CASE("element construction checks its witness and keeps the lag") {
  Graph lone = corpus::get("single_loop");
  auto f_inf = ep(lone, {}, "v", {"f"});
  auto e0 = make_element(lone, f_inf, 1, 1, f_inf);
  CHECK(e0.k() == 0);
  CHECK(e0.is_unit());
  CHECK(e0.witness_m() == 1);
  CHECK(e0.witness_n() == 1);
  CHECK(e0 == unit_at(lone, f_inf));

  Graph tail = corpus::get("loop_with_tail");
  auto hang = ep(tail, {"g"}, "u", {"f"});
  auto plain = ep(tail, {}, "v", {"f"});
  auto hop = make_element(tail, hang, 1, 0, plain);
  CHECK(hop.k() == 1);
  CHECK(hop.x() == hang);
  CHECK(hop.y() == plain);
  CHECK_FALSE(hop.is_unit());

  // same triple through a different witness pair
  CHECK(make_element(tail, hang, 2, 1, plain) == hop);

  Graph mix = corpus::get("isolated_mix");
  auto sink = BoundaryPoint::finite(mix, Path::of_edges(mix, {"h"}));
  CHECK_THROWS_AS(make_element(mix, sink, 0, 0, ep(mix, {}, "v", {"f"})), DomainError);
  // witness exceeding a finite point's length
  CHECK_THROWS_AS(make_element(mix, sink, 2, 0, sink), DomainError);
}

TEST_CASE("composition adds lags and rejects mismatched middles") {
  Graph tail = corpus::get("loop_with_tail");
  auto hang = ep(tail, {"g"}, "u", {"f"});
  auto plain = ep(tail, {}, "v", {"f"});

  auto down = make_element(tail, hang, 1, 0, plain);
  auto spin = make_element(tail, plain, 1, 0, plain);
  auto both = compose(tail, down, spin);
  CHECK(both.x() == hang);
  CHECK(both.y() == plain);
  CHECK(both.k() == 2);

  CHECK(compose(tail, down, inverse(tail, down)) == unit_at(tail, hang));
  CHECK(compose(tail, inverse(tail, down), down) == unit_at(tail, plain));

  auto up = make_element(tail, plain, 0, 1, hang);
  CHECK_THROWS_AS(compose(tail, down, down), DomainError);
  CHECK(compose(tail, down, up).is_unit());
}

TEST_CASE("inverse flips the endpoints and negates the lag") {
  Graph pair = corpus::get("two_cycle");
  auto at_u = ep(pair, {}, "u", {"a", "b"});
  auto at_v = ep(pair, {}, "v", {"b", "a"});
  auto step = make_element(pair, at_u, 1, 0, at_v);
  auto back = inverse(pair, step);
  CHECK(back.x() == at_v);
  CHECK(back.y() == at_u);
  CHECK(back.k() == -1);
  CHECK(inverse(pair, back) == step);
  CHECK(range_unit(pair, step) == unit_at(pair, at_u));
  CHECK(source_unit(pair, step) == unit_at(pair, at_v));
}

TEST_CASE("display strings show the triple") {
  Graph lone = corpus::get("single_loop");
  auto f_inf = ep(lone, {}, "v", {"f"});
  CHECK(to_string(make_element(lone, f_inf, 1, 0, f_inf)) == "((f)^inf, 1, (f)^inf)");
}

TEST_CASE("enumeration at small depth matches frozen counts") {
  Graph sink = corpus::get("single_sink");
  auto only = enumerate_elements(sink, 2);
  REQUIRE(only.size() == 1);
  CHECK(only[0].is_unit());
  CHECK(only[0].x() == BoundaryPoint::at_vertex(sink, "v"));

  // single loop: lags -2..2 on the one point
  Graph lone = corpus::get("single_loop");
  auto spin = enumerate_elements(lone, 2);
  REQUIRE(spin.size() == 5);
  std::set<std::int64_t> lags;
  for (const auto& e : spin) {
    CHECK(e.x() == ep(lone, {}, "v", {"f"}));
    CHECK(e.y() == e.x());
    lags.insert(e.k());
  }
  CHECK(lags == std::set<std::int64_t>{-2, -1, 0, 1, 2});

  Graph tail = corpus::get("loop_with_tail");
  CHECK(enumerate_elements(tail, 1).size() == 8);
  CHECK(enumerate_elements(tail, 0).size() == 1);
}

TEST_CASE("enumeration agrees with the word-window reconstruction") {
  for (const auto& name :
       {"single_sink", "single_loop", "loop_with_tail", "two_cycle", "path_two_to_sink",
        "isolated_mix", "double_tail_loop", "two_disjoint_two_cycles"}) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    for (std::size_t depth : {1u, 2u, 3u}) {
      CAPTURE(depth);
      auto got = enumerate_elements(g, depth);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
      std::set<std::tuple<BoundaryPoint, std::int64_t, BoundaryPoint>> seen;
      for (const auto& e : got) seen.insert({e.x(), e.k(), e.y()});
      CHECK(seen == elements_by_words(g, depth));
    }
  }
}

TEST_CASE("groupoid axioms hold on every enumerated element") {
  for (const auto& name : {"single_loop", "loop_with_tail", "two_cycle", "isolated_mix"}) {
    CAPTURE(name);
    Graph g = corpus::get(name);
    auto elems = enumerate_elements(g, 3);
    for (const auto& a : elems) {
      // two-sided inverse through the units
      CHECK(compose(g, a, inverse(g, a)) == range_unit(g, a));
      CHECK(compose(g, inverse(g, a), a) == source_unit(g, a));
      CHECK(compose(g, range_unit(g, a), a) == a);
      CHECK(compose(g, a, source_unit(g, a)) == a);
      for (const auto& b : elems) {
        if (!(a.y() == b.x())) continue;
        auto ab = compose(g, a, b);
        CHECK(ab.k() == a.k() + b.k());
        // associativity over every composable triple
        for (const auto& c : elems) {
          if (!(b.y() == c.x())) continue;
          CHECK(compose(g, ab, c) == compose(g, a, compose(g, b, c)));
        }
      }
    }
  }
}
