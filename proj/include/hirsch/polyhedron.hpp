#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hirsch/qmatrix.hpp"
#include "hirsch/rational.hpp"

namespace hirsch {

using Bits = boost::dynamic_bitset<>;

/// One row b + a·x >= 0 (or = 0 when listed as linearity).
struct HalfSpace {
  Rational b;
  QVector a;

  bool operator==(const HalfSpace&) const = default;
};

/// Inequality description. Row labels are optional; when present they name
/// the facets (e.g. the vertices of the polar polytope).
struct HPolyhedron {
  std::size_t d = 0;
  std::vector<HalfSpace> rows;
  std::set<std::size_t> linearity;  // 0-based row indices
  std::vector<std::string> labels;  // empty, or one per row

  std::string row_label(std::size_t i) const;
  bool operator==(const HPolyhedron&) const = default;
};

/// Vertex and ray description.
struct VPolyhedron {
  std::size_t d = 0;
  std::vector<QVector> vertices;
  std::vector<QVector> rays;
  std::vector<std::string> labels;  // empty, or one per vertex

  bool empty() const { return vertices.empty(); }
  bool bounded() const { return rays.empty(); }
  std::string vertex_label(std::size_t i) const;
  /// Index of the vertex with the given label, if any.
  std::optional<std::size_t> find_vertex(const std::string& label) const;
  bool operator==(const VPolyhedron&) const = default;
};

/// Tightness of every vertex (and ray) against every row.
struct Incidence {
  std::vector<Bits> vertex_rows;  // vertex_rows[v][i]: b_i + a_i·v == 0
  std::vector<Bits> ray_rows;     // ray_rows[r][i]: a_i·r == 0

  std::size_t row_count() const { return vertex_rows.empty() ? 0 : vertex_rows.front().size(); }
  bool tight(std::size_t v, std::size_t i) const { return vertex_rows[v][i]; }
};

/// Simple undirected graph with labeled nodes.
class PolyGraph {
 public:
  PolyGraph() = default;
  explicit PolyGraph(std::vector<std::string> labels)
      : labels_(std::move(labels)), adjacency_(labels_.size()) {}

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Adds {u, v}; loops and duplicates are ignored.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adjacency_[u]; }
  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Subgraph induced on `keep` (node order preserved).
  PolyGraph induced(const std::vector<std::size_t>& keep) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;  // sorted
};

/// x = offset + basis·y, mapping reduced coordinates y back to the ambient space.
struct AffineMap {
  QVector offset;
  QMatrix basis;  // ambient dim × reduced dim

  QVector apply(std::span<const Rational> y) const;
};

struct ReducedPolyhedron {
  HPolyhedron h;
  AffineMap back;
  std::vector<std::size_t> source_rows;  // original index of every reduced row
};

/// Vertices and extreme rays of H, sorted lexicographically. An empty vertex
/// list means H is infeasible. Throws NotPointedError when H contains a line.
VPolyhedron hrep_to_vrep(const HPolyhedron& h);

/// Irredundant inequality description of conv(vertices) + cone(rays).
/// Equality rows (for lower-dimensional input) come first and are listed as
/// linearity; facet rows follow in lexicographic order of their primitive
/// integer coefficients (b, a).
HPolyhedron vrep_to_hrep(const VPolyhedron& v);

/// Throws InvalidArgument when a vertex or ray violates a row.
Incidence incidence(const HPolyhedron& h, const VPolyhedron& v);

/// Dimension of the affine hull. Throws InfeasibleError on an empty set.
std::size_t dimension(const HPolyhedron& h);

/// Re-expresses H inside its affine hull. Linearity rows and rows that become
/// constant are dropped. Throws InfeasibleError on an empty set.
ReducedPolyhedron reduce_to_full_dim(const HPolyhedron& h);

/// Rows that define facets: not implicit equalities, tight generators of affine
/// dimension dim-1, and the lowest index among rows with identical tight sets.
std::vector<std::size_t> facet_rows(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc);

/// Vertex graph: {u, v} is an edge iff no third vertex lies on every row tight
/// at both (minimal face test). Only bounded edges are produced.
PolyGraph skeleton_graph(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc);

/// Facet graph of a bounded full-dimensional polytope; facets are adjacent iff
/// their common vertices span a (d-2)-dimensional affine space.
PolyGraph dual_graph(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc);

struct Classification {
  bool simple = false;
  bool simplicial = false;
};

Classification classify(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc);

struct PolarResult {
  HPolyhedron h;
  QVector translation;  // added to every vertex before dualizing
};

/// Translates the vertex centroid to the origin and emits 1 - v·x >= 0 per vertex.
PolarResult polar(const VPolyhedron& v);

/// Everything the graph-level operations need, computed once.
struct Polytope {
  HPolyhedron h;  // full-dimensional
  AffineMap embedding;
  std::vector<std::size_t> source_rows;  // input row index of every row of h
  VPolyhedron v;
  Incidence inc;
  std::vector<std::size_t> facets;
  PolyGraph graph;

  std::size_t dim() const { return h.d; }
  bool bounded() const { return v.bounded(); }
  /// Tight facet set of a vertex, indexed by position in `facets`.
  Bits facet_set(std::size_t vertex) const;
};

/// Reduces to full dimension, converts, and builds the skeleton graph. When
/// rows are dropped and H is unlabeled, the kept rows are labeled by their
/// input position (f1, f2, ...).
/// Throws InfeasibleError or NotPointedError.
Polytope analyze(const HPolyhedron& h);

/// Affine rank of a point set: dimension of its affine hull (-1 when empty).
long affine_dimension(const std::vector<QVector>& points);

}  // namespace hirsch
