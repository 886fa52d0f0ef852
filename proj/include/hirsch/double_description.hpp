#pragma once

#include <vector>

#include "hirsch/qmatrix.hpp"
#include "hirsch/rational.hpp"

namespace hirsch {

/// Generators of the cone {z : A·z >= 0, E·z = 0}.
struct ConeGenerators {
  /// Extreme rays of the cone intersected with the orthogonal complement of
  /// its lineality space, each as a primitive integer vector.
  std::vector<ZVector> rays;
  /// Basis of the lineality space {z : A·z = 0, E·z = 0}.
  std::vector<QVector> lineality;
};

/// Double description method. Inequality rows are inserted in the order given;
/// the first full-rank subset (greedy, in order) seeds the initial simplicial
/// cone. Adjacency of rays uses the combinatorial minimal-face test, so
/// degenerate inputs are handled exactly.
ConeGenerators cone_generators(const QMatrix& inequalities, const QMatrix& equalities);

}  // namespace hirsch
