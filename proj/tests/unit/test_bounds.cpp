#include <doctest.h>

#include "fixtures.hpp"
#include "hirsch/bounds.hpp"
#include "hirsch/constructions.hpp"
#include "hirsch/errors.hpp"

using namespace hirsch;

TEST_CASE("bound table examples") {
  const BoundTable t = bound_table(12, 4);
  CHECK(t.lower == 7);
  CHECK(t.known_exact == Integer(7));
  CHECK(t.larman == Integer(24));
  CHECK(t.kalai_kleitman == 1728.0);
  CHECK(t.hirsch_rhs == 8);

  const BoundTable t93 = bound_table(9, 3);
  CHECK(t93.lower == 5);
  CHECK(t93.known_exact == Integer(5));

  CHECK(bound_table(9, 4).known_exact == Integer(5));
  CHECK(bound_table(9, 4).hirsch_rhs == 5);
  CHECK_FALSE(bound_table(13, 4).known_exact);
  CHECK_FALSE(bound_table(5, 2).larman);
  CHECK_THROWS_AS(bound_table(4, 4), InvalidArgument);
  CHECK_THROWS_AS(bound_table(5, 1), InvalidArgument);
}

TEST_CASE("known values") {
  CHECK(known_max_diameter(9, 2) == Integer(4));
  CHECK(known_max_diameter(8, 4) == Integer(4));
  CHECK(known_max_diameter(10, 4) == Integer(5));
  CHECK(known_max_diameter(11, 4) == Integer(6));
  CHECK(known_max_diameter(10, 5) == Integer(5));
  CHECK(known_max_diameter(11, 5) == Integer(6));
  CHECK(known_max_diameter(12, 6) == Integer(6));
  for (std::size_t n = 4; n <= 30; ++n) {
    const BoundTable t = bound_table(n, 3);
    CHECK(t.lower == Integer(static_cast<unsigned long>(2 * n / 3)) - 1);
    CHECK(t.known_exact == t.lower);
  }
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::size_t n = d + 1; n <= 14; ++n) {
      const BoundTable t = bound_table(n, d);
      if (!t.known_exact) continue;
      CHECK(t.lower <= *t.known_exact);
      CHECK(*t.known_exact <= t.hirsch_rhs);
    }
}

TEST_CASE("exact Kalai-Kleitman predicate") {
  CHECK(kalai_kleitman_at_least(12, 4, 1728));
  CHECK_FALSE(kalai_kleitman_at_least(12, 4, 1729));
  CHECK(kalai_kleitman_at_least(8, 3, 8 * 27));  // 8^(1+log2 3) = 8·3^3
  CHECK_FALSE(kalai_kleitman_at_least(8, 3, 8 * 27 + 1));
  // 9^(1 + log2 3) = 9^2.58496... = 292.87...
  CHECK(kalai_kleitman_at_least(9, 3, 292));
  CHECK_FALSE(kalai_kleitman_at_least(9, 3, 293));
  CHECK(bound_table(9, 3).kalai_kleitman > 292.0);
  CHECK(bound_table(9, 3).kalai_kleitman < 293.0);
  CHECK(kalai_kleitman_value(12, 4) == 1728.0);
}

TEST_CASE("Hirsch reports") {
  const nlohmann::json q4 = hirsch_report(klee_walkup().q4);
  CHECK(q4["n"] == 9);
  CHECK(q4["d"] == 4);
  CHECK(q4["diameter"] == 5);
  CHECK(q4["n_minus_d"] == 5);
  CHECK(q4["satisfies_hirsch"] == true);
  CHECK(q4["hirsch_sharp"] == true);
  CHECK(q4["simple"] == true);
  CHECK(q4["vertex_count"] == 27);
  CHECK(q4["witness_pair"].size() == 2);
  CHECK_FALSE(q4.contains("nonrevisiting"));

  const HPolyhedron h = klee_walkup().q4;
  const Polytope p = analyze(h);
  const Diameter d = diameter(p.graph);
  std::size_t k = 0;
  while (p.inc.tight(d.u, k) || p.inc.tight(d.v, k)) ++k;
  const nlohmann::json un = hirsch_report(unbound_at_facet(h, k).h);
  CHECK(un["n"] == 8);
  CHECK(un["d"] == 4);
  CHECK(un["bounded"] == false);
  CHECK(un["diameter"].get<std::size_t>() >= 5);
  CHECK(un["satisfies_hirsch"] == false);

  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const nlohmann::json c = hirsch_report(generate_canonical(CanonicalKind::cube, dim));
    CHECK(c["diameter"] == dim);
    CHECK(c["n_minus_d"] == dim);
    CHECK(c["hirsch_sharp"] == true);
  }

  ReportOptions options;
  options.nonrevisiting = true;
  options.monotone = QVector{1, 2, 3};
  const nlohmann::json cube = hirsch_report(generate_canonical(CanonicalKind::cube, 3), options);
  CHECK(cube["nonrevisiting"]["status"] == "holds");
  CHECK(cube["monotone"]["worst_length"] == 3);
  CHECK(cube["monotone"]["from_minimum"] == 3);
}

TEST_CASE("corpus diameters respect the upper bounds") {
  for (const auto& [name, h] : fixture::corpus()) {
    CAPTURE(name);
    const Polytope p = analyze(h);
    const std::size_t n = p.facets.size(), d = p.dim();
    if (d < 2) continue;
    const Integer diam(static_cast<unsigned long>(diameter(p.graph).value));
    CHECK(kalai_kleitman_at_least(n, d, diam));
    const BoundTable t = bound_table(n, d);
    if (t.larman) CHECK(diam <= *t.larman);
  }
}
