#include "hirsch/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "hirsch/double_description.hpp"
#include "hirsch/errors.hpp"

namespace hirsch {

std::string HPolyhedron::row_label(std::size_t i) const {
  return labels.empty() ? "f" + std::to_string(i + 1) : labels[i];
}

std::string VPolyhedron::vertex_label(std::size_t i) const {
  return labels.empty() ? "v" + std::to_string(i + 1) : labels[i];
}

std::optional<std::size_t> VPolyhedron::find_vertex(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertex_label(i) == label) return i;
  return std::nullopt;
}

std::optional<std::size_t> PolyGraph::find(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void PolyGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || has_edge(u, v)) return;
  adjacency_[u].insert(std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(std::upper_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
}

bool PolyGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t PolyGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> PolyGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (auto v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

PolyGraph PolyGraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  std::map<std::size_t, std::size_t> position;
  for (auto k : keep) {
    position[k] = names.size();
    names.push_back(labels_[k]);
  }
  PolyGraph g(std::move(names));
  for (auto k : keep)
    for (auto n : adjacency_[k]) {
      const auto it = position.find(n);
      if (it != position.end()) g.add_edge(position[k], it->second);
    }
  return g;
}

QVector AffineMap::apply(std::span<const Rational> y) const {
  QVector x = offset;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) x[i] += basis(i, j) * y[j];
  return x;
}

namespace {

struct Generators {
  std::vector<QVector> vertices;
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
};

QVector homogenized(const HalfSpace& row) {
  QVector z;
  z.reserve(row.a.size() + 1);
  z.push_back(row.b);
  z.insert(z.end(), row.a.begin(), row.a.end());
  return z;
}

// Runs the double description method on the homogenized cone of H.
Generators generators(const HPolyhedron& h) {
  struct Keyed {
    ZVector key;
    std::size_t index;
  };
  std::vector<Keyed> ineq;
  std::vector<QVector> eq;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.rows[i].a.size() != h.d) throw InvalidArgument("row length does not match dimension");
    const QVector z = homogenized(h.rows[i]);
    if (h.linearity.contains(i)) eq.push_back(z);
    else ineq.push_back({primitive_integer(std::span<const Rational>(z)), i});
  }
  std::stable_sort(ineq.begin(), ineq.end(),
                   [](const Keyed& x, const Keyed& y) { return lex_less(x.key, y.key); });

  std::vector<QVector> a_rows;
  QVector x0(h.d + 1);
  x0[0] = 1;
  a_rows.push_back(x0);
  for (const auto& k : ineq) a_rows.push_back(to_rational(k.key));

  const ConeGenerators cone =
      cone_generators(QMatrix::from_rows(a_rows), QMatrix::from_rows(eq, h.d + 1));

  Generators g;
  for (const auto& ray : cone.rays) {
    if (sgn(ray[0]) > 0) {
      QVector p(h.d);
      for (std::size_t i = 0; i < h.d; ++i) p[i] = ratio(ray[i + 1], ray[0]);
      g.vertices.push_back(std::move(p));
    } else {
      g.rays.push_back(to_rational(std::span<const Integer>(ray).subspan(1)));
    }
  }
  for (const auto& l : cone.lineality) g.lineality.emplace_back(l.begin() + 1, l.end());
  std::sort(g.vertices.begin(), g.vertices.end(), lex_less<Rational>);
  std::sort(g.rays.begin(), g.rays.end(), lex_less<Rational>);
  return g;
}

QMatrix generator_matrix(const std::vector<QVector>& vertices, const std::vector<QVector>& rays,
                         std::size_t d) {
  std::vector<QVector> rows;
  for (const auto& v : vertices) {
    QVector r{Rational(1)};
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : rays) {
    QVector r{Rational(0)};
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  return QMatrix::from_rows(rows, d + 1);
}

// Sign-normalized primitive integer form of an equality row.
QVector canonical_equality(const QVector& z) {
  ZVector p = primitive_integer(std::span<const Rational>(z));
  for (const auto& x : p) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : p) y = -y;
    break;
  }
  return to_rational(p);
}

}  // namespace

VPolyhedron hrep_to_vrep(const HPolyhedron& h) {
  Generators g = generators(h);
  VPolyhedron v;
  v.d = h.d;
  if (g.vertices.empty()) return v;
  if (!g.lineality.empty()) throw NotPointedError();
  v.vertices = std::move(g.vertices);
  v.rays = std::move(g.rays);
  return v;
}

HPolyhedron vrep_to_hrep(const VPolyhedron& v) {
  if (v.vertices.empty()) throw InvalidArgument("empty V-representation");
  const QMatrix m = generator_matrix(v.vertices, v.rays, v.d);
  const ConeGenerators cone = cone_generators(m, QMatrix(0, v.d + 1));

  HPolyhedron h;
  h.d = v.d;
  if (!cone.lineality.empty()) {
    const RowEchelon e = rref(QMatrix::from_rows(cone.lineality));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const QVector z = canonical_equality(QVector(e.reduced.row(r).begin(), e.reduced.row(r).end()));
      h.linearity.insert(h.rows.size());
      h.rows.push_back({z[0], QVector(z.begin() + 1, z.end())});
    }
  }
  std::vector<ZVector> facets;
  for (const auto& ray : cone.rays) {
    const QVector z = to_rational(ray);
    bool touches_vertex = false;
    for (std::size_t i = 0; i < v.vertices.size() && !touches_vertex; ++i)
      touches_vertex = sgn(dot(m.row(i), z)) == 0;
    if (touches_vertex) facets.push_back(ray);
  }
  std::sort(facets.begin(), facets.end(), lex_less<Integer>);
  for (const auto& f : facets) {
    const QVector z = to_rational(f);
    h.rows.push_back({z[0], QVector(z.begin() + 1, z.end())});
  }
  return h;
}

Incidence incidence(const HPolyhedron& h, const VPolyhedron& v) {
  const std::size_t m = h.rows.size();
  Incidence inc;
  for (std::size_t k = 0; k < v.vertices.size(); ++k) {
    Bits bits(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational value = h.rows[i].b + dot(h.rows[i].a, v.vertices[k]);
      const int s = sgn(value);
      if (s < 0 || (s != 0 && h.linearity.contains(i)))
        throw InvalidArgument("vertex " + v.vertex_label(k) + " violates row " + std::to_string(i + 1));
      if (s == 0) bits.set(i);
    }
    inc.vertex_rows.push_back(std::move(bits));
  }
  for (std::size_t k = 0; k < v.rays.size(); ++k) {
    Bits bits(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int s = sgn(dot(h.rows[i].a, v.rays[k]));
      if (s < 0 || (s != 0 && h.linearity.contains(i)))
        throw InvalidArgument("ray " + std::to_string(k + 1) + " violates row " + std::to_string(i + 1));
      if (s == 0) bits.set(i);
    }
    inc.ray_rows.push_back(std::move(bits));
  }
  return inc;
}

long affine_dimension(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  return static_cast<long>(rank(generator_matrix(points, {}, points.front().size()))) - 1;
}

std::size_t dimension(const HPolyhedron& h) {
  const Generators g = generators(h);
  if (g.vertices.empty()) throw InfeasibleError();
  std::vector<QVector> directions = g.rays;
  directions.insert(directions.end(), g.lineality.begin(), g.lineality.end());
  return rank(generator_matrix(g.vertices, directions, h.d)) - 1;
}

ReducedPolyhedron reduce_to_full_dim(const HPolyhedron& h) {
  const Generators g = generators(h);
  if (g.vertices.empty()) throw InfeasibleError();
  std::vector<QVector> directions = g.rays;
  directions.insert(directions.end(), g.lineality.begin(), g.lineality.end());
  const std::vector<QVector> eqs = null_space(generator_matrix(g.vertices, directions, h.d));

  // Equations c0 + c·x = 0 of the affine hull, solved for their pivot variables.
  QMatrix system(eqs.size(), h.d + 1);
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (std::size_t j = 0; j < h.d; ++j) system(r, j) = eqs[r][j + 1];
    system(r, h.d) = -eqs[r][0];
  }
  const RowEchelon e = rref(system);
  std::vector<bool> is_pivot(h.d, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < h.d; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  ReducedPolyhedron out;
  out.back.offset.assign(h.d, Rational(0));
  out.back.basis = QMatrix(h.d, free_cols.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.back.offset[e.pivots[r]] = e.reduced(r, h.d);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out.back.basis(free_cols[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      out.back.basis(e.pivots[r], k) = -e.reduced(r, free_cols[k]);
  }

  out.h.d = free_cols.size();
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.linearity.contains(i)) continue;
    const HalfSpace& row = h.rows[i];
    HalfSpace reduced{row.b + dot(row.a, out.back.offset), QVector(out.h.d)};
    bool constant = true;
    for (std::size_t k = 0; k < out.h.d; ++k) {
      reduced.a[k] = dot(row.a, out.back.basis.column(k));
      constant = constant && sgn(reduced.a[k]) == 0;
    }
    if (constant) continue;
    out.h.rows.push_back(std::move(reduced));
    if (!h.labels.empty()) out.h.labels.push_back(h.labels[i]);
    out.source_rows.push_back(i);
  }
  return out;
}

std::vector<std::size_t> facet_rows(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc) {
  const QMatrix all = generator_matrix(v.vertices, v.rays, v.d);
  const std::size_t full_rank = rank(all);
  std::vector<std::size_t> out;
  std::map<std::pair<Bits, Bits>, std::size_t> seen;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.linearity.contains(i)) continue;
    Bits on_vertices(v.vertices.size()), on_rays(v.rays.size());
    std::vector<QVector> tight_v, tight_r;
    for (std::size_t k = 0; k < v.vertices.size(); ++k)
      if (inc.vertex_rows[k][i]) {
        on_vertices.set(k);
        tight_v.push_back(v.vertices[k]);
      }
    for (std::size_t k = 0; k < v.rays.size(); ++k)
      if (inc.ray_rows[k][i]) {
        on_rays.set(k);
        tight_r.push_back(v.rays[k]);
      }
    if (on_vertices.all() && on_rays.all()) continue;  // implicit equality
    if (tight_v.empty() || tight_v.size() + tight_r.size() + 1 < full_rank) continue;
    if (rank(generator_matrix(tight_v, tight_r, v.d)) + 1 != full_rank) continue;
    if (seen.emplace(std::make_pair(on_vertices, on_rays), i).second) out.push_back(i);
  }
  return out;
}

PolyGraph skeleton_graph(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.vertices.size(); ++i) names.push_back(v.vertex_label(i));
  PolyGraph g(std::move(names));
  const std::size_t n = v.vertices.size();
  const std::size_t need = h.d == 0 ? 0 : h.d - 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Bits common = inc.vertex_rows[a] & inc.vertex_rows[b];
      if (common.count() < need) continue;
      bool minimal = true;
      for (std::size_t c = 0; c < n && minimal; ++c) {
        if (c == a || c == b) continue;
        if (common.is_subset_of(inc.vertex_rows[c])) minimal = false;
      }
      if (minimal) g.add_edge(a, b);
    }
  }
  return g;
}

PolyGraph dual_graph(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc) {
  if (!v.bounded()) throw InvalidArgument("dual graph requires a bounded polytope");
  const std::vector<std::size_t> facets = facet_rows(h, v, inc);
  const long dim = affine_dimension(v.vertices);
  std::vector<Bits> on_facet;
  std::vector<std::string> names;
  for (auto f : facets) {
    Bits bits(v.vertices.size());
    for (std::size_t k = 0; k < v.vertices.size(); ++k)
      if (inc.vertex_rows[k][f]) bits.set(k);
    on_facet.push_back(std::move(bits));
    names.push_back(h.row_label(f));
  }
  PolyGraph g(std::move(names));
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      const Bits shared = on_facet[a] & on_facet[b];
      if (static_cast<long>(shared.count()) < dim - 1) continue;
      std::vector<QVector> pts;
      for (auto k = shared.find_first(); k != Bits::npos; k = shared.find_next(k))
        pts.push_back(v.vertices[k]);
      if (affine_dimension(pts) == dim - 2) g.add_edge(a, b);
    }
  }
  return g;
}

Classification classify(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc) {
  const std::vector<std::size_t> facets = facet_rows(h, v, inc);
  const auto dim = static_cast<std::size_t>(std::max(0L, affine_dimension(v.vertices)));
  Classification c{true, v.bounded()};
  for (std::size_t k = 0; k < v.vertices.size() && c.simple; ++k) {
    std::size_t count = 0;
    for (auto f : facets) count += inc.vertex_rows[k][f] ? 1 : 0;
    c.simple = count == dim;
  }
  for (std::size_t idx = 0; idx < facets.size() && c.simplicial; ++idx) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < v.vertices.size(); ++k) count += inc.vertex_rows[k][facets[idx]] ? 1 : 0;
    c.simplicial = count == dim;
  }
  return c;
}

PolarResult polar(const VPolyhedron& v) {
  if (!v.bounded()) throw InvalidArgument("polar requires a bounded polytope");
  if (affine_dimension(v.vertices) != static_cast<long>(v.d))
    throw InvalidArgument("polar requires a full-dimensional polytope");
  PolarResult out;
  out.translation.assign(v.d, Rational(0));
  for (const auto& p : v.vertices)
    for (std::size_t i = 0; i < v.d; ++i) out.translation[i] -= p[i];
  const Rational count(static_cast<long>(v.vertices.size()));
  for (auto& t : out.translation) t /= count;
  out.h.d = v.d;
  for (std::size_t k = 0; k < v.vertices.size(); ++k) {
    HalfSpace row{Rational(1), QVector(v.d)};
    for (std::size_t i = 0; i < v.d; ++i) row.a[i] = -(v.vertices[k][i] + out.translation[i]);
    out.h.rows.push_back(std::move(row));
    out.h.labels.push_back(v.vertex_label(k));
  }
  return out;
}

Bits Polytope::facet_set(std::size_t vertex) const {
  Bits bits(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (inc.vertex_rows[vertex][facets[i]]) bits.set(i);
  return bits;
}

Polytope analyze(const HPolyhedron& h) {
  Polytope p;
  ReducedPolyhedron reduced = reduce_to_full_dim(h);
  p.h = std::move(reduced.h);
  p.embedding = std::move(reduced.back);
  p.source_rows = std::move(reduced.source_rows);
  if (p.h.labels.empty() && p.h.rows.size() != h.rows.size()) {
    for (auto r : p.source_rows) p.h.labels.push_back(h.row_label(r));
  }
  p.v = hrep_to_vrep(p.h);
  p.inc = incidence(p.h, p.v);
  p.facets = facet_rows(p.h, p.v, p.inc);
  p.graph = skeleton_graph(p.h, p.v, p.inc);
  return p;
}

}  // namespace hirsch
