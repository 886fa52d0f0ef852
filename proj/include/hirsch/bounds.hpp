#pragma once

#include <cstddef>
#include <optional>

#include <json.hpp>

#include "hirsch/paths.hpp"
#include "hirsch/polyhedron.hpp"
#include "hirsch/rational.hpp"

namespace hirsch {

struct BoundTable {
  std::size_t n = 0;
  std::size_t d = 0;
  Integer lower;                  // floor((d-1)n/d) - (d-2)
  std::optional<Integer> larman;  // n·2^(d-3), d >= 3
  double kalai_kleitman = 0;      // n^(log2 d + 1), rounded up to a double
  std::optional<Integer> known_exact;
  Integer hirsch_rhs;             // n - d
};

/// Requires n > d >= 2.
BoundTable bound_table(std::size_t n, std::size_t d);

/// Exact values of the maximum diameter H(n, d) known for small parameters.
std::optional<Integer> known_max_diameter(std::size_t n, std::size_t d);

/// n^(log2 d + 1) rounded up to a double.
double kalai_kleitman_value(std::size_t n, std::size_t d);

/// Exact test of n^(log2 d + 1) >= k. Integer arithmetic when d or n is a
/// power of two; otherwise an MPFR enclosure refined until it separates.
bool kalai_kleitman_at_least(std::size_t n, std::size_t d, const Integer& k);

/// n·2^(d-1).
Integer linear_subset_bound(std::size_t n, std::size_t d);

nlohmann::json to_json(const BoundTable& t);

struct ReportOptions {
  bool nonrevisiting = false;
  std::optional<QVector> monotone;  // objective for the monotone analysis
  std::size_t budget = kDefaultSearchBudget;
};

/// {n, d, bounded, vertex_count, diameter, n_minus_d, satisfies_hirsch,
/// hirsch_sharp, simple, simplicial, witness_pair} plus the optional
/// nonrevisiting and monotone records. n counts irredundant facets and d is
/// the dimension of the polyhedron.
nlohmann::json hirsch_report(const Polytope& p, const ReportOptions& options = {});
nlohmann::json hirsch_report(const HPolyhedron& h, const ReportOptions& options = {});

}  // namespace hirsch
