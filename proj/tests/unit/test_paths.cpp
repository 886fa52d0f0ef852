#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hirsch/constructions.hpp"
#include "hirsch/errors.hpp"
#include "hirsch/paths.hpp"
#include "oracles.hpp"

using namespace hirsch;

namespace {

std::vector<std::vector<bool>> adjacency(const PolyGraph& g) {
  std::vector<std::vector<bool>> adj(g.size(), std::vector<bool>(g.size(), false));
  for (const auto& [a, b] : g.edges()) adj[a][b] = adj[b][a] = true;
  return adj;
}

std::vector<std::vector<bool>> facet_sets(const Polytope& p) {
  std::vector<std::vector<bool>> out;
  for (std::size_t k = 0; k < p.v.vertices.size(); ++k) {
    const Bits b = p.facet_set(k);
    std::vector<bool> row(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) row[i] = b[i];
    out.push_back(row);
  }
  return out;
}

std::vector<Bits> facet_bits(const Polytope& p) {
  std::vector<Bits> out;
  for (std::size_t k = 0; k < p.v.vertices.size(); ++k) out.push_back(p.facet_set(k));
  return out;
}

Polytope canonical(CanonicalKind k, std::size_t d) { return analyze(generate_canonical(k, d)); }

void check_path_shape(const PathReport& r, const PolyGraph& g) {
  REQUIRE(r.path.size() == r.length + 1);
  CHECK(r.path.front() == r.source);
  CHECK(r.path.back() == r.target);
  for (std::size_t i = 0; i + 1 < r.path.size(); ++i) CHECK(g.has_edge(r.path[i], r.path[i + 1]));
}

// Pentagon with vertices (i, i^2) and a hand-enumerated monotone analysis.
// Vertices sorted: (0,0) (1,1) (2,4) (3,9) (4,16); the cycle is
// 0-1-2-3-4-0. With c = (1, 0) the maximizer is (4,16): 0 -> 4 is one step,
// 1 must climb 1 -> 2 -> 3 -> 4, 2 -> 3 -> 4 takes two.
// With c = (1, -1/6) values are 0, 5/6, 4/3, 3/2, 4/3: maximizer (3,9),
// 0 -> 4 -> 3 and 1 -> 2 -> 3 take two steps.
// With c = (-1, 1/10) values are 0, -0.9, -1.6, -2.1, -2.4: maximizer (0,0),
// 4 -> 0 is a direct edge, 3 -> 2 -> 1 -> 0 takes three steps.
}  // namespace

TEST_CASE("bfs distances") {
  const Polytope cube = canonical(CanonicalKind::cube, 4);
  for (std::size_t s = 0; s < cube.v.vertices.size(); s += 5) {
    const auto dist = bfs_distances(cube.graph, s);
    for (std::size_t t = 0; t < cube.v.vertices.size(); ++t) {
      std::size_t h = 0;
      for (std::size_t i = 0; i < 4; ++i) h += cube.v.vertices[s][i] != cube.v.vertices[t][i] ? 1 : 0;
      CHECK(dist[t] == h);
    }
  }
  const Polytope simplex = canonical(CanonicalKind::simplex, 4);
  for (auto d : bfs_distances(simplex.graph, 2)) CHECK(d <= 1);

  PolyGraph two({"x", "y"});
  two.add_edge(0, 1);
  CHECK(bfs_distances(two, 0) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(bfs_distances(two, 7), InvalidArgument);

  PolyGraph apart({"x", "y"});
  CHECK(bfs_distances(apart, 0)[1] == kUnreachable);
  CHECK_THROWS_AS(diameter(apart), DisconnectedError);
}

TEST_CASE("diameters of canonical polytopes and Q4") {
  for (std::size_t d = 2; d <= 5; ++d) {
    CHECK(diameter(canonical(CanonicalKind::cube, d).graph).value == d);
    CHECK(diameter(canonical(CanonicalKind::crosspolytope, d).graph).value == 2);
    CHECK(diameter(canonical(CanonicalKind::simplex, d).graph).value == 1);
  }
  CHECK(diameter(analyze(klee_walkup().q4).graph).value == 5);
}

TEST_CASE("diameter is the maximum of the distances and its witness is the first pair") {
  for (const auto& [name, h] : fixture::corpus()) {
    CAPTURE(name);
    const Polytope p = analyze(h);
    const Diameter d = diameter(p.graph);
    std::size_t best = 0;
    std::pair<std::size_t, std::size_t> first{0, 0};
    for (std::size_t s = 0; s < p.graph.size(); ++s) {
      const auto dist = bfs_distances(p.graph, s);
      for (std::size_t t = 0; t < dist.size(); ++t)
        if (dist[t] > best) {
          best = dist[t];
          first = {s, t};
        }
    }
    CHECK(d.value == best);
    CHECK(std::make_pair(d.u, d.v) == first);
    CHECK(d.value == oracle::graph_diameter(adjacency(p.graph)));
  }
}

TEST_CASE("shortest paths follow edges") {
  const Polytope q4 = analyze(klee_walkup().q4);
  const Diameter d = diameter(q4.graph);
  const auto r = shortest_path(q4.graph, d.u, d.v);
  REQUIRE(r);
  CHECK(r->length == 5);
  check_path_shape(*r, q4.graph);
  const nlohmann::json j = to_json(*r, q4.graph);
  CHECK(j["kind"] == "shortest");
  CHECK(j["path"].size() == 6);
}

TEST_CASE("non-revisiting paths on the cube, Q4 and the simplex") {
  const Polytope cube = canonical(CanonicalKind::cube, 3);
  const std::size_t far = 7;  // (1,1,1) is antipodal to (-1,-1,-1)
  auto r = nonrevisiting_path(cube, 0, far);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.path->length == 3);
  CHECK(oracle::nonrevisiting_length(adjacency(cube.graph), facet_sets(cube), 0, far, 3) == 3u);

  const Polytope q4 = analyze(klee_walkup().q4);
  const Diameter d = diameter(q4.graph);
  r = nonrevisiting_path(q4, d.u, d.v);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.path->length == 5);
  check_path_shape(*r.path, q4.graph);
  CHECK(to_json(*r.path, q4.graph)["kind"] == "non-revisiting");

  const Polytope simplex = canonical(CanonicalKind::simplex, 3);
  r = nonrevisiting_path(simplex, 0, 3);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(r.path->length == 1);
}

TEST_CASE("non-revisiting search agrees with plain backtracking") {
  for (const auto& [name, h] : fixture::corpus()) {
    const Polytope p = analyze(h);
    if (p.v.vertices.size() > 30) continue;
    CAPTURE(name);
    const std::size_t cap = p.facets.size() - p.dim();
    const auto adj = adjacency(p.graph);
    const auto sets = facet_sets(p);
    for (std::size_t u = 0; u < p.v.vertices.size(); u += 3)
      for (std::size_t v = 0; v < p.v.vertices.size(); v += 2) {
        if (u == v) continue;
        const auto r = nonrevisiting_path(p, u, v);
        const auto expected = oracle::nonrevisiting_length(adj, sets, u, v, cap);
        REQUIRE(r.status != SearchStatus::inconclusive);
        CHECK((r.status == SearchStatus::found) == expected.has_value());
        if (r.path) {
          CHECK(r.path->length == *expected);
          CHECK(r.path->length <= cap);
          check_path_shape(*r.path, p.graph);
        }
      }
  }
}

TEST_CASE("non-revisiting property") {
  for (std::size_t d = 2; d <= 4; ++d) CHECK(nonrevisiting_property(canonical(CanonicalKind::cube, d)).holds());
  CHECK(nonrevisiting_property(analyze(klee_walkup().q4)).holds());
  CHECK(nonrevisiting_property(canonical(CanonicalKind::simplex, 4)).holds());
}

TEST_CASE("non-revisiting search reports a failing pair and an exhausted budget") {
  // Path a-b-c where b leaves set 0 and c re-enters it.
  PolyGraph g({"a", "b", "c"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  std::vector<Bits> sets(3, Bits(2));
  sets[0].set(0);
  sets[1].set(1);
  sets[2].set(0);
  CHECK(nonrevisiting_search(g, sets, 0, 2, 5, 1000).status == SearchStatus::none);
  const PropertyResult pr = nonrevisiting_property(g, sets, 5, 1000);
  CHECK(pr.status == SearchStatus::none);
  CHECK(pr.witness == std::make_pair(std::size_t{0}, std::size_t{2}));

  const Polytope q4 = analyze(klee_walkup().q4);
  CHECK(nonrevisiting_property(q4, 3).status == SearchStatus::inconclusive);
  const Diameter d = diameter(q4.graph);
  CHECK(nonrevisiting_path(q4, d.u, d.v, 2).status == SearchStatus::inconclusive);
}

TEST_CASE("monotone eccentricity on the cube and simplex") {
  for (std::size_t d = 2; d <= 4; ++d) {
    const Polytope cube = canonical(CanonicalKind::cube, d);
    const MonotoneResult m = monotone_eccentricity(cube, QVector(d, Rational(1)));
    CHECK(cube.v.vertices[m.optimum] == QVector(d, Rational(1)));
    CHECK(m.worst_length == d);
    CHECK(m.unreachable.empty());
    CHECK(m.from_minimum == d);
  }
  const Polytope simplex = canonical(CanonicalKind::simplex, 3);
  CHECK(monotone_eccentricity(simplex, {1, 2, 3}).worst_length == 1);
}

TEST_CASE("monotone eccentricity on the pentagon") {
  const Polytope pentagon = analyze(polygon(5));
  MonotoneResult m = monotone_eccentricity(pentagon, {1, 0});
  CHECK(pentagon.v.vertices[m.optimum] == QVector{4, 16});
  CHECK(m.worst_length == 3);
  CHECK(m.lengths == std::vector<std::size_t>{1, 3, 2, 1, 0});

  m = monotone_eccentricity(pentagon, {1, ratio(-1, 6)});
  CHECK(pentagon.v.vertices[m.optimum] == QVector{3, 9});
  CHECK(m.worst_length == 2);
  CHECK(m.lengths == std::vector<std::size_t>{2, 2, 1, 0, 1});

  m = monotone_eccentricity(pentagon, {-1, ratio(1, 10)});
  CHECK(pentagon.v.vertices[m.optimum] == QVector{0, 0});
  CHECK(m.worst_length == 3);
  CHECK(m.lengths == std::vector<std::size_t>{0, 1, 2, 3, 1});
}

TEST_CASE("monotone lengths are at least the plain distance") {
  for (const auto& [name, h] : fixture::corpus()) {
    CAPTURE(name);
    const Polytope p = analyze(h);
    QVector c(p.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ratio(static_cast<long>(i * i + 1), 7 + static_cast<long>(i) * 100);
    MonotoneResult m;
    try {
      m = monotone_eccentricity(p, c);
    } catch (const InvalidArgument&) {
      continue;
    }
    const auto dist = bfs_distances(p.graph, m.optimum);
    for (std::size_t k = 0; k < dist.size(); ++k) CHECK(m.lengths[k] >= dist[k]);
  }
}

TEST_CASE("monotone eccentricity rejects ties") {
  const Polytope cube = canonical(CanonicalKind::cube, 3);
  CHECK_THROWS_WITH_AS(monotone_eccentricity(cube, {1, 0, 0}), "non-unique optimum", InvalidArgument);
  const Polytope square = canonical(CanonicalKind::cube, 2);
  CHECK_THROWS_AS(monotone_eccentricity(square, {0, 1}), InvalidArgument);
  const Polytope pentagon = analyze(polygon(5));
  CHECK_THROWS_WITH_AS(monotone_eccentricity(pentagon, {-5, 1}), "tie on edge", InvalidArgument);
}
