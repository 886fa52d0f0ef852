#include "hirsch/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cassert>
#include <utility>

namespace hirsch {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  ZVector coords;
  Bits zero;  // processed rows on which the ray is tight
};

Integer dot_z(const ZVector& row, const ZVector& ray) {
  Integer s = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (sgn(row[i]) != 0 && sgn(ray[i]) != 0) s += row[i] * ray[i];
  }
  return s;
}

// Columns of `basis` (given as a list of column vectors) applied to `w`.
QVector combine(const std::vector<QVector>& basis, std::span<const Rational> w, std::size_t dim) {
  QVector z(dim);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sgn(w[j]) == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) z[i] += basis[j][i] * w[j];
  }
  return z;
}

std::vector<QVector> identity_columns(std::size_t n) {
  std::vector<QVector> cols(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
  return cols;
}

// Rows of `a` times the column basis.
QMatrix restrict_to(const QMatrix& a, const std::vector<QVector>& basis) {
  QMatrix out(a.rows(), basis.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < basis.size(); ++j) out(r, j) = dot(a.row(r), basis[j]);
  return out;
}

// Greedy choice of linearly independent rows, in order, until `target` rows.
std::vector<std::size_t> initial_basis(const std::vector<ZVector>& rows, std::size_t target) {
  std::vector<std::size_t> chosen;
  std::vector<QVector> echelon;  // reduced rows, each with a distinct pivot
  std::vector<std::size_t> pivot_col;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < target; ++r) {
    QVector v = to_rational(rows[r]);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational f = v[pivot_col[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon[k][j];
    }
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) continue;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational f = echelon[k][p];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) echelon[k][j] -= f * v[j];
    }
    echelon.push_back(std::move(v));
    pivot_col.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace

ConeGenerators cone_generators(const QMatrix& inequalities, const QMatrix& equalities) {
  const std::size_t dim = inequalities.cols();
  ConeGenerators out;

  // z = N·w parametrizes the equality subspace.
  std::vector<QVector> n_basis =
      equalities.rows() == 0 ? identity_columns(dim) : null_space(equalities);
  if (n_basis.empty()) return out;
  const QMatrix a1 = restrict_to(inequalities, n_basis);

  // Split off the lineality space; w = N2·u ranges over its complement.
  const std::vector<QVector> lin = null_space(a1);
  for (const auto& l : lin) out.lineality.push_back(combine(n_basis, l, dim));
  std::vector<QVector> n2_basis = identity_columns(a1.cols());
  if (!lin.empty()) n2_basis = null_space(QMatrix::from_rows(lin));
  const std::size_t cone_dim = n2_basis.size();
  if (cone_dim == 0) return out;
  const QMatrix a2 = restrict_to(a1, n2_basis);

  const std::size_t m = a2.rows();
  std::vector<ZVector> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) rows.push_back(primitive_integer(a2.row(r)));

  const std::vector<std::size_t> basis = initial_basis(rows, cone_dim);
  assert(basis.size() == cone_dim);

  // Initial simplicial cone: rays are the columns of the inverse basis matrix.
  QMatrix b(cone_dim, cone_dim);
  for (std::size_t i = 0; i < cone_dim; ++i)
    for (std::size_t j = 0; j < cone_dim; ++j) b(i, j) = rows[basis[i]][j];
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < cone_dim; ++j) {
    QVector e(cone_dim);
    e[j] = 1;
    const auto col = solve_affine(b, e);
    assert(col);
    Ray ray{primitive_integer(std::span<const Rational>(*col)), Bits(m)};
    for (std::size_t i = 0; i < cone_dim; ++i)
      if (i != j) ray.zero.set(basis[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (auto r : basis) processed[r] = true;
  // All-zero rows are satisfied with equality everywhere.
  for (std::size_t r = 0; r < m; ++r) {
    bool zero = true;
    for (const auto& x : rows[r]) zero = zero && sgn(x) == 0;
    if (!zero) continue;
    processed[r] = true;
    for (auto& ray : rays) ray.zero.set(r);
  }

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    processed[h] = true;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot_z(rows[h], rays[i].coords);
      const int s = sgn(value[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
      else rays[i].zero.set(h);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (sgn(value[i]) >= 0) next.push_back(rays[i]);

    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (cone_dim >= 2 && common.count() < cone_dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        ZVector coords(cone_dim);
        for (std::size_t k = 0; k < cone_dim; ++k)
          coords[k] = value[p] * rays[q].coords[k] - value[q] * rays[p].coords[k];
        common.set(h);
        next.push_back(Ray{primitive_integer(std::span<const Integer>(coords)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  // Map back to the original coordinates: z = N·(N2·u).
  for (const auto& ray : rays) {
    const QVector u = to_rational(ray.coords);
    const QVector w = combine(n2_basis, u, a1.cols());
    const QVector z = combine(n_basis, w, dim);
    out.rays.push_back(primitive_integer(std::span<const Rational>(z)));
  }
  return out;
}

}  // namespace hirsch
