#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hirsch/polyhedron.hpp"

namespace hirsch {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Shortest-path distances from `source`; unreachable nodes get kUnreachable.
std::vector<std::size_t> bfs_distances(const PolyGraph& g, std::size_t source);

struct Diameter {
  std::size_t value = 0;
  std::size_t u = 0;  // lexicographically first pair attaining the maximum
  std::size_t v = 0;
};

/// Throws DisconnectedError when some pair is unreachable.
Diameter diameter(const PolyGraph& g);

enum class PathKind { shortest, nonrevisiting, monotone };

struct PathReport {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t length = 0;
  std::vector<std::size_t> path;
  PathKind kind = PathKind::shortest;
};

/// {source, target, length, path, kind} with node labels.
nlohmann::json to_json(const PathReport& report, const PolyGraph& g);

/// Shortest path; neighbors are scanned in index order. nullopt if unreachable.
std::optional<PathReport> shortest_path(const PolyGraph& g, std::size_t source, std::size_t target);

enum class SearchStatus { found, none, inconclusive };

struct NonrevisitingResult {
  SearchStatus status = SearchStatus::none;
  std::optional<PathReport> path;
};

/// Searches for a path along which no member of any node's set, once left, is
/// entered again. With polytope vertices labeled by their facet sets this is the
/// non-revisiting path; with simplices labeled by their vertex sets it is the
/// dual version on a complex. Paths never exceed `max_length` steps; the
/// returned path is a shortest one among non-revisiting paths. `budget` caps
/// the number of search-state expansions.
NonrevisitingResult nonrevisiting_search(const PolyGraph& g, const std::vector<Bits>& sets,
                                         std::size_t source, std::size_t target,
                                         std::size_t max_length, std::size_t budget);

inline constexpr std::size_t kDefaultSearchBudget = 50'000'000;

/// Non-revisiting path between two vertices of a bounded polytope, capped at
/// n - d steps. A found path is asserted to respect that cap.
NonrevisitingResult nonrevisiting_path(const Polytope& p, std::size_t u, std::size_t v,
                                       std::size_t budget = kDefaultSearchBudget);

struct PropertyResult {
  SearchStatus status = SearchStatus::found;  // found: property holds for every pair
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first failing pair

  bool holds() const { return status == SearchStatus::found; }
};

/// Exhaustive check over all ordered pairs via per-source search of the state
/// space (vertex, sets left so far).
PropertyResult nonrevisiting_property(const PolyGraph& g, const std::vector<Bits>& sets,
                                      std::size_t max_length, std::size_t budget = kDefaultSearchBudget);

PropertyResult nonrevisiting_property(const Polytope& p, std::size_t budget = kDefaultSearchBudget);

struct MonotoneResult {
  std::size_t optimum = 0;
  std::size_t worst_length = 0;
  std::size_t worst_source = 0;
  std::vector<std::size_t> lengths;      // shortest monotone path length per source
  std::vector<std::size_t> unreachable;  // sources with no monotone path
  std::size_t minimum = 0;               // unique minimizer when it exists
  std::optional<std::size_t> from_minimum;
};

/// Orients every edge toward larger c-value and measures shortest monotone
/// paths into the unique maximizer. Throws InvalidArgument on a non-unique
/// optimum or a tie along an edge.
MonotoneResult monotone_eccentricity(const Polytope& p, const QVector& c);

}  // namespace hirsch
