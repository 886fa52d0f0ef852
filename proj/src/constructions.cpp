#include "hirsch/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hirsch/errors.hpp"
#include "hirsch/paths.hpp"

namespace hirsch {

namespace {

HalfSpace make_row(Rational b, QVector a) { return HalfSpace{std::move(b), std::move(a)}; }

QVector unit(std::size_t d, std::size_t i, long value = 1) {
  QVector e(d);
  e[i] = value;
  return e;
}

std::size_t find_vertex_at(const VPolyhedron& v, const QVector& x) {
  const auto it = std::find(v.vertices.begin(), v.vertices.end(), x);
  if (it == v.vertices.end()) throw std::logic_error("expected vertex not found");
  return static_cast<std::size_t>(it - v.vertices.begin());
}

}  // namespace

HPolyhedron generate_canonical(CanonicalKind kind, std::size_t d) {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  HPolyhedron h;
  h.d = d;
  switch (kind) {
    case CanonicalKind::simplex:
      for (std::size_t i = 0; i < d; ++i) h.rows.push_back(make_row(0, unit(d, i)));
      h.rows.push_back(make_row(1, QVector(d, Rational(-1))));
      return h;
    case CanonicalKind::cube:
      for (std::size_t i = 0; i < d; ++i) {
        h.rows.push_back(make_row(1, unit(d, i)));
        h.rows.push_back(make_row(1, unit(d, i, -1)));
      }
      return h;
    case CanonicalKind::crosspolytope: {
      VPolyhedron v;
      v.d = d;
      for (std::size_t i = 0; i < d; ++i) {
        v.vertices.push_back(unit(d, i));
        v.vertices.push_back(unit(d, i, -1));
      }
      return vrep_to_hrep(v);
    }
  }
  return h;
}

HPolyhedron polygon(std::size_t n) {
  if (n < 3) throw InvalidArgument("a polygon needs at least 3 vertices");
  VPolyhedron v;
  v.d = 2;
  for (std::size_t i = 0; i < n; ++i) {
    const long x = static_cast<long>(i);
    v.vertices.push_back({Rational(x), Rational(x * x)});
  }
  return vrep_to_hrep(v);
}

HPolyhedron product(const HPolyhedron& p, const HPolyhedron& q) {
  HPolyhedron h;
  h.d = p.d + q.d;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    QVector a = p.rows[i].a;
    a.resize(h.d);
    if (p.linearity.contains(i)) h.linearity.insert(h.rows.size());
    h.rows.push_back(make_row(p.rows[i].b, std::move(a)));
  }
  for (std::size_t i = 0; i < q.rows.size(); ++i) {
    QVector a(p.d);
    a.insert(a.end(), q.rows[i].a.begin(), q.rows[i].a.end());
    if (q.linearity.contains(i)) h.linearity.insert(h.rows.size());
    h.rows.push_back(make_row(q.rows[i].b, std::move(a)));
  }
  return h;
}

HPolyhedron wedge(const HPolyhedron& h, std::size_t k) {
  if (k >= h.rows.size()) throw InvalidArgument("facet index out of range");
  const Polytope p = analyze(h);
  if (!p.bounded()) throw InvalidArgument("wedge requires a bounded polytope");
  bool facet = false;
  for (auto f : p.facets) facet = facet || p.source_rows[f] == k;
  if (!facet) throw InvalidArgument("row " + std::to_string(k + 1) + " is redundant");

  HPolyhedron w;
  w.d = h.d + 1;
  w.linearity = h.linearity;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    QVector a = h.rows[i].a;
    a.push_back(i == k ? Rational(-1) : Rational(0));
    w.rows.push_back(make_row(h.rows[i].b, std::move(a)));
  }
  w.rows.push_back(make_row(0, unit(w.d, h.d)));
  if (!h.labels.empty()) {
    w.labels = h.labels;
    w.labels.push_back("t" + std::to_string(w.d));
  }
  return w;
}

HPolyhedron truncate_vertex(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc,
                            std::size_t vertex) {
  if (vertex >= v.vertices.size()) throw InvalidArgument("unknown vertex");
  if (!v.bounded()) throw InvalidArgument("truncation requires a bounded polytope");
  if (affine_dimension(v.vertices) != static_cast<long>(h.d))
    throw InvalidArgument("truncation requires a full-dimensional polytope");
  const auto facets = facet_rows(h, v, inc);
  std::size_t tight = 0;
  for (auto f : facets) tight += inc.vertex_rows[vertex][f] ? 1 : 0;
  const PolyGraph g = skeleton_graph(h, v, inc);
  if (tight != h.d || g.neighbors(vertex).size() != h.d)
    throw InvalidArgument("vertex " + v.vertex_label(vertex) + " is not simple");

  // Rows (1, m) for each edge midpoint m; the cut is the kernel of this system.
  QMatrix system(h.d, h.d + 1);
  std::size_t r = 0;
  for (auto w : g.neighbors(vertex)) {
    system(r, 0) = 1;
    for (std::size_t i = 0; i < h.d; ++i)
      system(r, i + 1) = (v.vertices[vertex][i] + v.vertices[w][i]) / 2;
    ++r;
  }
  const auto kernel = null_space(system);
  if (kernel.size() != 1) throw std::logic_error("edge midpoints are not affinely independent");
  QVector z = to_rational(primitive_integer(std::span<const Rational>(kernel.front())));
  HalfSpace cut{z[0], QVector(z.begin() + 1, z.end())};
  if (sgn(cut.b + dot(cut.a, v.vertices[vertex])) > 0) {
    cut.b = -cut.b;
    for (auto& x : cut.a) x = -x;
  }
  HPolyhedron out = h;
  out.rows.push_back(std::move(cut));
  if (!out.labels.empty()) out.labels.push_back("cut" + std::to_string(out.rows.size()));
  return out;
}

KleeWalkup klee_walkup() {
  static const std::vector<std::pair<std::string, std::vector<long>>> points = {
      {"a", {-3, 3, 1, 2}},  {"b", {3, -3, 1, 2}},   {"c", {2, -1, 1, 3}},
      {"d", {-2, 1, 1, 3}},  {"e", {3, 3, -1, 2}},   {"f", {-3, -3, -1, 2}},
      {"g", {-1, -2, -1, 3}}, {"h", {1, 2, -1, 3}},  {"w", {0, 0, 0, -2}},
  };
  KleeWalkup kw;
  kw.q4_star.d = 4;
  kw.q4.d = 4;
  for (const auto& [name, coords] : points) {
    QVector p(coords.begin(), coords.end());
    QVector a;
    for (const auto& x : p) a.push_back(-x);
    kw.q4_star.vertices.push_back(p);
    kw.q4_star.labels.push_back(name);
    kw.q4.rows.push_back(make_row(1, std::move(a)));
    kw.q4.labels.push_back(name);
  }
  return kw;
}

QVector UnboundResult::map_point(std::span<const Rational> x) const {
  QVector centered(x.begin(), x.end());
  for (std::size_t i = 0; i < centered.size(); ++i) centered[i] -= centroid[i];
  const Rational s = sent_away.b + dot(sent_away.a, centered);
  if (sgn(s) == 0) throw InvalidArgument("point lies on the facet sent to infinity");
  for (auto& c : centered) c /= s;
  return centered;
}

UnboundResult unbound_at_facet(const HPolyhedron& h, std::size_t k) {
  if (k >= h.rows.size()) throw InvalidArgument("facet index out of range");
  const Polytope p = analyze(h);
  if (!p.bounded()) throw InvalidArgument("unbounding requires a bounded polytope");
  if (p.dim() != h.d) throw InvalidArgument("unbounding requires a full-dimensional polytope");

  UnboundResult out;
  out.centroid.assign(h.d, Rational(0));
  for (const auto& x : p.v.vertices)
    for (std::size_t i = 0; i < h.d; ++i) out.centroid[i] += x[i];
  for (auto& c : out.centroid) c /= static_cast<long>(p.v.vertices.size());

  auto centered = [&](const HalfSpace& row) {
    return HalfSpace{row.b + dot(row.a, out.centroid), row.a};
  };
  out.sent_away = centered(h.rows[k]);
  if (sgn(out.sent_away.b) <= 0) throw InvalidArgument("chosen row does not strictly contain the centroid");

  out.h.d = h.d;
  const Rational& bk = out.sent_away.b;
  const QVector& ak = out.sent_away.a;
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (i == k) continue;
    const HalfSpace row = centered(h.rows[i]);
    QVector a(h.d);
    for (std::size_t j = 0; j < h.d; ++j) a[j] = bk * row.a[j] - row.b * ak[j];
    if (h.linearity.contains(i)) out.h.linearity.insert(out.h.rows.size());
    out.h.rows.push_back(make_row(row.b, std::move(a)));
    if (!h.labels.empty()) out.h.labels.push_back(h.labels[i]);
  }
  return out;
}

HPolyhedron transportation_system(const QVector& rows, const QVector& cols) {
  if (rows.empty() || cols.empty()) throw InvalidArgument("margins must be nonempty");
  Rational total_rows = 0, total_cols = 0;
  for (const auto& x : rows) {
    if (sgn(x) <= 0) throw InvalidArgument("margins must be positive");
    total_rows += x;
  }
  for (const auto& x : cols) {
    if (sgn(x) <= 0) throw InvalidArgument("margins must be positive");
    total_cols += x;
  }
  if (total_rows != total_cols) throw InvalidArgument("unbalanced margins");

  const std::size_t p = rows.size(), q = cols.size();
  HPolyhedron h;
  h.d = p * q;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      h.rows.push_back(make_row(0, unit(h.d, i * q + j)));
      h.labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  for (std::size_t i = 0; i < p; ++i) {
    QVector a(h.d);
    for (std::size_t j = 0; j < q; ++j) a[i * q + j] = 1;
    h.linearity.insert(h.rows.size());
    h.rows.push_back(make_row(-rows[i], std::move(a)));
    h.labels.push_back("row" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < q; ++j) {
    QVector a(h.d);
    for (std::size_t i = 0; i < p; ++i) a[i * q + j] = 1;
    h.linearity.insert(h.rows.size());
    h.rows.push_back(make_row(-cols[j], std::move(a)));
    h.labels.push_back("col" + std::to_string(j + 1));
  }
  return h;
}

HPolyhedron transportation(const QVector& rows, const QVector& cols) {
  return reduce_to_full_dim(transportation_system(rows, cols)).h;
}

VPolyhedron random_01_polytope(std::size_t d, std::size_t m, std::uint64_t seed) {
  if (d < 1 || d > 30) throw InvalidArgument("dimension must be between 1 and 30");
  if (m < d + 1) throw InvalidArgument("need at least d+1 points");
  if (m > (std::size_t{1} << d)) throw InvalidArgument("more points requested than the cube has");
  std::mt19937_64 engine(seed);
  const std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::set<std::uint64_t> drawn;
    while (drawn.size() < m) drawn.insert(engine() & mask);
    VPolyhedron v;
    v.d = d;
    for (auto bits : drawn) {
      QVector x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = static_cast<long>((bits >> i) & 1);
      v.vertices.push_back(std::move(x));
    }
    if (affine_dimension(v.vertices) != static_cast<long>(d)) continue;
    std::sort(v.vertices.begin(), v.vertices.end(), lex_less<Rational>);
    return v;
  }
  throw InvalidArgument("could not reach full dimension");
}

std::vector<std::size_t> simplex_partition(std::size_t d, std::size_t k) {
  std::vector<std::size_t> parts(k, d / k);
  for (std::size_t i = 0; i < d % k; ++i) ++parts[i];
  return parts;
}

bool klee_walkup_reachable(std::size_t d, std::size_t n) {
  if (d < 4) return false;
  if (d == 4) return n == 9;
  for (std::size_t j = 1; j <= 3; ++j)
    if (n >= j && n - j > 2 * (d - 1) && klee_walkup_reachable(d - 1, n - j)) return true;
  return false;
}

namespace {

HPolyhedron products_route(std::size_t d, std::size_t n) {
  const auto parts = simplex_partition(d, n - d);
  HPolyhedron h = generate_canonical(CanonicalKind::simplex, parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    h = product(h, generate_canonical(CanonicalKind::simplex, parts[i]));
  return h;
}

// Wedge over a facet avoiding a diameter pair, then cut off the lifts of the
// pair on the t = 0 facet, one per extra facet wanted.
HPolyhedron wedge_and_cut(const HPolyhedron& base, std::size_t truncations) {
  const Polytope p = analyze(base);
  const Diameter far = diameter(p.graph);
  std::optional<std::size_t> avoid;
  for (auto f : p.facets) {
    if (p.inc.tight(far.u, f) || p.inc.tight(far.v, f)) continue;
    avoid = p.source_rows[f];
    break;
  }
  if (!avoid) throw InvalidArgument("no facet avoids the diameter pair");
  HPolyhedron h = wedge(base, *avoid);
  const std::size_t ends[2] = {far.u, far.v};
  for (std::size_t i = 0; i < truncations; ++i) {
    QVector lifted = p.v.vertices[ends[i]];
    lifted.push_back(0);
    const Polytope w = analyze(h);
    h = truncate_vertex(w.h, w.v, w.inc, find_vertex_at(w.v, lifted));
  }
  return h;
}

HPolyhedron klee_walkup_route(std::size_t d, std::size_t n) {
  if (d == 4) return klee_walkup().q4;
  for (std::size_t j = 1; j <= 3; ++j) {
    if (n - j > 2 * (d - 1) && klee_walkup_reachable(d - 1, n - j))
      return wedge_and_cut(klee_walkup_route(d - 1, n - j), j - 1);
  }
  throw std::logic_error("unreachable parameters");
}

}  // namespace

HPolyhedron hirsch_sharp(std::size_t d, std::size_t n, SharpRoute route) {
  const bool small = d >= 1 && d < n && n <= 2 * d;
  const bool reachable = klee_walkup_reachable(d, n);
  if (route == SharpRoute::automatic) route = small ? SharpRoute::products : SharpRoute::klee_walkup;
  if (route == SharpRoute::products) {
    if (!small) throw InvalidArgument("products of simplices need d < n <= 2d");
    return products_route(d, n);
  }
  if (!reachable)
    throw InvalidArgument("(d, n) = (" + std::to_string(d) + ", " + std::to_string(n) +
                          ") is outside the constructible region: need d < n <= 2d, or n <= 3d - 3 "
                          "reachable from Q4 by wedge and truncation");
  return klee_walkup_route(d, n);
}

HPolyhedron orthant_polytope(std::size_t d, std::size_t k) {
  if (k < 1 || k > d) throw InvalidArgument("need 1 <= k <= d");
  HPolyhedron h;
  h.d = d;
  for (std::size_t i = 0; i < d; ++i) h.rows.push_back(make_row(0, unit(d, i)));
  for (std::size_t j = 0; j + 1 < k; ++j) {
    QVector a(d);
    a[j] = -1;
    const Rational eps = ratio(static_cast<long>(j + 1), static_cast<long>(4 * (k + 1)));
    for (std::size_t i = k; i < d; ++i) a[i] = eps;
    h.rows.push_back(make_row(1, std::move(a)));
  }
  h.rows.push_back(make_row(static_cast<long>(k), QVector(d, Rational(-1))));
  return h;
}

}  // namespace hirsch
