#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hirsch/paths.hpp"
#include "hirsch/polyhedron.hpp"

namespace hirsch {

/// Pure simplicial complex given by its facets. Each facet is a sorted list of
/// indices into `labels`.
struct SimplicialComplex {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> facets;

  std::size_t facet_size() const { return facets.empty() ? 0 : facets.front().size(); }
  /// Labels concatenated, or comma-separated if any label is longer than one character.
  std::string facet_name(std::size_t f) const;
  std::optional<std::size_t> find_facet(const std::string& name) const;
  std::optional<std::size_t> find_label(const std::string& label) const;
  /// Number of labels used by at least one facet.
  std::size_t used_vertex_count() const;
};

/// One facet per facet row (in facet_rows order), named by vertex labels.
/// Throws InvalidArgument unless the polytope is bounded and simplicial.
SimplicialComplex boundary_complex(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc);

/// Facets adjacent iff they share all but one vertex.
PolyGraph ridge_graph(const SimplicialComplex& k);

/// Facets not containing `label`. The label list is unchanged.
SimplicialComplex anti_star(const SimplicialComplex& k, const std::string& label);

/// For every facet pair, looks for a ridge path that never re-enters the star
/// of a vertex it has left. Paths are capped at (#vertices - facet size) steps,
/// which every such path respects.
PropertyResult dual_nonrevisiting_property(const SimplicialComplex& k,
                                           std::size_t budget = kDefaultSearchBudget);

/// One facet per line, whitespace-separated labels; '#' starts a comment.
SimplicialComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& k);

}  // namespace hirsch
