#pragma once

// Polytopes shared by the unit and acceptance suites.

#include <string>
#include <utility>
#include <vector>

#include "hirsch/constructions.hpp"
#include "hirsch/polyhedron.hpp"
#include "oracles.hpp"

namespace fixture {

using hirsch::CanonicalKind;
using hirsch::HPolyhedron;

struct Named {
  std::string name;
  HPolyhedron h;
};

inline std::vector<oracle::Row> oracle_rows(const HPolyhedron& h) {
  std::vector<oracle::Row> rows;
  for (const auto& r : h.rows) rows.push_back({r.b, r.a});
  return rows;
}

inline HPolyhedron square() { return hirsch::generate_canonical(CanonicalKind::cube, 2); }

/// Bounded full-dimensional polytopes of dimension <= 5.
inline std::vector<Named> corpus() {
  std::vector<Named> out;
  for (std::size_t d = 2; d <= 4; ++d) {
    out.push_back({"simplex" + std::to_string(d), hirsch::generate_canonical(CanonicalKind::simplex, d)});
    out.push_back({"cube" + std::to_string(d), hirsch::generate_canonical(CanonicalKind::cube, d)});
    out.push_back({"cross" + std::to_string(d), hirsch::generate_canonical(CanonicalKind::crosspolytope, d)});
  }
  for (std::size_t n = 3; n <= 7; ++n) out.push_back({"polygon" + std::to_string(n), hirsch::polygon(n)});
  out.push_back({"q4", hirsch::klee_walkup().q4});
  out.push_back({"prism5", hirsch::product(hirsch::polygon(5), hirsch::generate_canonical(CanonicalKind::cube, 1))});
  out.push_back({"orthant4_2", hirsch::orthant_polytope(4, 2)});
  out.push_back({"transport23", hirsch::transportation({2, 1}, {1, 1, 1})});
  const auto cube = hirsch::analyze(hirsch::generate_canonical(CanonicalKind::cube, 3));
  out.push_back({"cut_cube3", hirsch::truncate_vertex(cube.h, cube.v, cube.inc, 0)});
  return out;
}

}  // namespace fixture
