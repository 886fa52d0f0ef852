#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "hirsch/io.hpp"
#include "hirsch/polyhedron.hpp"

namespace hirsch {

// Operations shared by the command line and recipe replay. Facet indices are
// 1-based; vertex references are graph labels (v1, v2, ... unless the input
// names its vertices) or 1-based indices.

HPolyhedron as_hrep(const PolyFile& f);
VPolyhedron as_vrep(const PolyFile& f);

/// analyze() on the H-representation; vertex labels of a V input are kept.
Polytope load_polytope(const PolyFile& f);

/// Node index for a label or a 1-based index. Throws InvalidArgument.
std::size_t resolve_node(const PolyGraph& g, const std::string& ref);

HPolyhedron wedge_op(const HPolyhedron& h, std::size_t facet);
HPolyhedron truncate_op(const HPolyhedron& h, const std::string& vertex);
HPolyhedron unbound_op(const HPolyhedron& h, std::size_t facet);
PolarResult polar_op(const PolyFile& f);

/// Rebuilds a file from its recipe. Recipes are JSON objects with a "kind"
/// (simplex, cube, crosspolytope, polygon, kleewalkup, orthant, hirsch_sharp,
/// transportation, zeroone, product, wedge, truncate, unbound, polar, convert)
/// and kind-specific parameters; operators nest their input recipes. The
/// returned file carries the recipe itself.
PolyFile run_recipe(const nlohmann::json& recipe);

/// `step` with the input's recipe nested under "input"; nullopt when the input
/// has no recipe.
std::optional<nlohmann::json> derived_recipe(const PolyFile& input, nlohmann::json step);

}  // namespace hirsch
