#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "hirsch/paths.hpp"
#include "hirsch/polyhedron.hpp"
#include "hirsch/rational.hpp"

namespace hirsch {

using Subset = std::vector<std::size_t>;  // sorted, elements in 1..n

/// Graph whose nodes are d-subsets of {1..n}. Node labels are "{1,2,4}".
struct SubsetFamilyGraph {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<Subset> nodes;
  PolyGraph graph;

  /// Nodes must be distinct sorted d-subsets of {1..n}; edges are node index pairs.
  static SubsetFamilyGraph make(std::size_t n, std::size_t d, std::vector<Subset> nodes,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges);
};

std::string subset_label(const Subset& s);

struct LayerCheck {
  bool valid = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first failing node pair
};

/// Every pair u, v must be joined by a path through nodes containing u ∩ v.
LayerCheck validate_layer_property(const SubsetFamilyGraph& g);

/// Vertices labeled by their tight facet sets (facet positions, 1-based).
/// Throws InvalidArgument unless the polytope is bounded and simple.
SubsetFamilyGraph from_simple_polytope(const Polytope& p);

struct SubsetDiameter {
  std::size_t value = 0;
  double power_bound = 0;  // n^(1 + log2 d), rounded up
  Integer linear_bound;    // n·2^(d-1)
  bool power_respected = true;
  bool linear_respected = true;
};

/// Throws DisconnectedError on a disconnected graph.
SubsetDiameter subset_graph_diameter(const SubsetFamilyGraph& g);

struct SearchResult {
  SubsetFamilyGraph best;
  std::size_t diameter = 0;
  bool complete = false;  // every candidate was examined
  std::uint64_t explored = 0;
};

/// Number of (node set, edge set) candidates for the exhaustive search,
/// saturating at UINT64_MAX.
std::uint64_t search_space_size(std::size_t n, std::size_t d);

/// Largest-diameter valid graph found. When the search space fits in
/// `budget`, candidates are enumerated by node-set size, then node sets in
/// lexicographic order, then edge sets by increasing bitmask, and the first
/// graph of maximal diameter is kept. Otherwise `budget` random candidates are
/// drawn from std::mt19937_64(seed) (a seed is then required). Requires
/// 1 <= d <= n, n <= 8, d <= 3.
SearchResult search_max_diameter(std::size_t n, std::size_t d, std::uint64_t budget,
                                 std::optional<std::uint64_t> seed = std::nullopt);

/// Header "n d", one node per line as indices, "edges:", then 1-based node pairs.
SubsetFamilyGraph read_subset_graph(std::istream& in);
void write_subset_graph(std::ostream& out, const SubsetFamilyGraph& g);

}  // namespace hirsch
