#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "hirsch/polyhedron.hpp"

namespace hirsch {

enum class CanonicalKind { simplex, cube, crosspolytope };

/// simplex: x >= 0, 1 - sum(x) >= 0. cube: -1 <= x_i <= 1.
/// crosspolytope: facets of conv(+-e_i).
HPolyhedron generate_canonical(CanonicalKind kind, std::size_t d);

/// Convex n-gon with vertices (i, i^2), i = 0..n-1.
HPolyhedron polygon(std::size_t n);

/// P x Q by block-diagonal stacking of the rows.
HPolyhedron product(const HPolyhedron& p, const HPolyhedron& q);

/// Wedge over the facet defined by row `k` (0-based) of a bounded polytope:
/// rows i != k get a zero coefficient on the new coordinate t, row k becomes
/// b_k + a_k·x - t >= 0, and t >= 0 is appended. Throws InvalidArgument when
/// row k is redundant or the polyhedron is unbounded.
HPolyhedron wedge(const HPolyhedron& h, std::size_t k);

/// Cuts off a simple vertex by the hyperplane through the midpoints of its d
/// incident edges. `h` must be full-dimensional and bounded.
HPolyhedron truncate_vertex(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc,
                            std::size_t vertex);

struct KleeWalkup {
  VPolyhedron q4_star;  // nine labeled points a..h, w
  HPolyhedron q4;       // rows 1 - p·x >= 0, one per point, same labels
};

KleeWalkup klee_walkup();

struct UnboundResult {
  HPolyhedron h;
  QVector centroid;     // vertex centroid moved to the origin first
  HalfSpace sent_away;  // the chosen row after centering

  /// Image of an input point not on the chosen facet.
  QVector map_point(std::span<const Rational> x) const;
};

/// Projective transformation sending facet row `k` to infinity. Each other row
/// becomes b_i + (b_k a_i - b_i a_k)·y >= 0 in centered coordinates.
UnboundResult unbound_at_facet(const HPolyhedron& h, std::size_t k);

/// Non-negative p x q matrices with the given row and column sums, as the
/// unreduced system (x_ij >= 0 plus p + q equality rows). Variable x_ij has
/// index i*q + j.
HPolyhedron transportation_system(const QVector& rows, const QVector& cols);

/// transportation_system reduced to its affine hull.
HPolyhedron transportation(const QVector& rows, const QVector& cols);

/// `m` distinct 0/1 points in dimension d drawn from std::mt19937_64(seed):
/// each draw takes the low d bits of one engine output; duplicates are
/// skipped; a draw whose hull is not full-dimensional is discarded and the
/// whole set redrawn, at most 100 times. Output sorted lexicographically.
VPolyhedron random_01_polytope(std::size_t d, std::size_t m, std::uint64_t seed);

enum class SharpRoute {
  automatic,    // products for n <= 2d, otherwise the Klee-Walkup route
  products,     // product of simplices, balanced partition of d into n - d parts
  klee_walkup,  // Q4 followed by wedge/truncate steps
};

/// A polytope of dimension d with n facets and diameter n - d.
HPolyhedron hirsch_sharp(std::size_t d, std::size_t n, SharpRoute route = SharpRoute::automatic);

/// Whether the Klee-Walkup route reaches (d, n).
bool klee_walkup_reachable(std::size_t d, std::size_t n);

/// Balanced partition of d into k parts, largest first.
std::vector<std::size_t> simplex_partition(std::size_t d, std::size_t k);

/// Intersection of the orthant x >= 0 with k functionals vanishing at
/// (1,..,1,0,..,0) (k ones): psi_j = 1 - x_j + eps_j·sum_{i>k} x_i for j < k,
/// and psi_k = k - sum(x).
HPolyhedron orthant_polytope(std::size_t d, std::size_t k);

}  // namespace hirsch
