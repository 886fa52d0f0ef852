#include "hirsch/recipe.hpp"

#include <cstdint>
#include <algorithm>

#include "hirsch/constructions.hpp"
#include "hirsch/errors.hpp"

namespace hirsch {

HPolyhedron as_hrep(const PolyFile& f) { return f.is_h() ? f.h() : vrep_to_hrep(f.v()); }

VPolyhedron as_vrep(const PolyFile& f) { return f.is_h() ? hrep_to_vrep(f.h()) : f.v(); }

Polytope load_polytope(const PolyFile& f) {
  if (f.is_h()) return analyze(f.h());
  const VPolyhedron& input = f.v();
  if (input.empty()) throw InfeasibleError();
  Polytope p = analyze(vrep_to_hrep(input));
  if (!input.labels.empty()) {
    std::vector<std::string> names;
    for (const auto& y : p.v.vertices) {
      const QVector x = p.embedding.apply(y);
      const auto it = std::find(input.vertices.begin(), input.vertices.end(), x);
      names.push_back(it == input.vertices.end() ? "" : input.labels[it - input.vertices.begin()]);
    }
    // Redundant input points are not vertices; keep the labels only if every
    // vertex was found.
    if (std::none_of(names.begin(), names.end(), [](const std::string& s) { return s.empty(); })) {
      p.v.labels = names;
      PolyGraph relabeled(names);
      for (const auto& [a, b] : p.graph.edges()) relabeled.add_edge(a, b);
      p.graph = std::move(relabeled);
    }
  }
  return p;
}

std::size_t resolve_node(const PolyGraph& g, const std::string& ref) {
  if (auto i = g.find(ref)) return *i;
  if (!ref.empty() && std::all_of(ref.begin(), ref.end(), ::isdigit)) {
    const unsigned long k = std::stoul(ref);
    if (k >= 1 && k <= g.size()) return k - 1;
  }
  throw InvalidArgument("unknown node '" + ref + "'");
}

namespace {

std::size_t zero_based(std::size_t facet, const HPolyhedron& h) {
  if (facet < 1 || facet > h.rows.size())
    throw InvalidArgument("facet index " + std::to_string(facet) + " out of range 1.." +
                          std::to_string(h.rows.size()));
  return facet - 1;
}

}  // namespace

HPolyhedron wedge_op(const HPolyhedron& h, std::size_t facet) { return wedge(h, zero_based(facet, h)); }

HPolyhedron unbound_op(const HPolyhedron& h, std::size_t facet) {
  return unbound_at_facet(h, zero_based(facet, h)).h;
}

HPolyhedron truncate_op(const HPolyhedron& h, const std::string& vertex) {
  const Polytope p = analyze(h);
  if (p.dim() != h.d) throw InvalidArgument("truncation requires a full-dimensional polytope");
  const QVector x = p.embedding.apply(p.v.vertices[resolve_node(p.graph, vertex)]);
  const VPolyhedron v = hrep_to_vrep(h);
  const auto it = std::find(v.vertices.begin(), v.vertices.end(), x);
  return truncate_vertex(h, v, incidence(h, v), static_cast<std::size_t>(it - v.vertices.begin()));
}

PolarResult polar_op(const PolyFile& f) {
  if (!f.is_h()) return polar(f.v());
  const Polytope p = analyze(f.h());
  if (p.dim() != f.h().d) throw InvalidArgument("polar requires a full-dimensional polytope");
  if (!p.bounded()) throw InvalidArgument("polar requires a bounded polytope");
  VPolyhedron v;
  v.d = f.h().d;
  for (const auto& y : p.v.vertices) v.vertices.push_back(p.embedding.apply(y));
  return polar(v);
}

namespace {

bool non_negative_integer(const nlohmann::json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::size_t get_count(const nlohmann::json& r, const char* key) {
  if (!r.contains(key) || !non_negative_integer(r[key]))
    throw InvalidArgument(std::string("recipe needs a non-negative integer '") + key + "'");
  return r[key].get<std::size_t>();
}

QVector get_rationals(const nlohmann::json& r, const char* key) {
  if (!r.contains(key) || !r[key].is_array())
    throw InvalidArgument(std::string("recipe needs an array '") + key + "'");
  QVector out;
  for (const auto& x : r[key]) {
    if (!x.is_string()) throw InvalidArgument(std::string("'") + key + "' entries must be strings");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

const nlohmann::json& get_input(const nlohmann::json& r, const char* key = "input") {
  if (!r.contains(key) || !r[key].is_object())
    throw InvalidArgument(std::string("recipe needs a nested recipe '") + key + "'");
  return r[key];
}

SharpRoute parse_route(const std::string& s) {
  if (s == "auto") return SharpRoute::automatic;
  if (s == "products") return SharpRoute::products;
  if (s == "kleewalkup") return SharpRoute::klee_walkup;
  throw InvalidArgument("unknown route '" + s + "'");
}

}  // namespace

PolyFile run_recipe(const nlohmann::json& recipe) {
  if (!recipe.is_object() || !recipe.contains("kind") || !recipe["kind"].is_string())
    throw InvalidArgument("recipe needs a string 'kind'");
  const std::string kind = recipe["kind"];
  PolyFile out;
  out.recipe = recipe;
  if (kind == "simplex") out.poly = generate_canonical(CanonicalKind::simplex, get_count(recipe, "d"));
  else if (kind == "cube") out.poly = generate_canonical(CanonicalKind::cube, get_count(recipe, "d"));
  else if (kind == "crosspolytope")
    out.poly = generate_canonical(CanonicalKind::crosspolytope, get_count(recipe, "d"));
  else if (kind == "polygon") out.poly = polygon(get_count(recipe, "n"));
  else if (kind == "kleewalkup") {
    const KleeWalkup kw = klee_walkup();
    if (recipe.value("star", false)) out.poly = kw.q4_star;
    else out.poly = kw.q4;
  } else if (kind == "orthant") out.poly = orthant_polytope(get_count(recipe, "dim"), get_count(recipe, "k"));
  else if (kind == "hirsch_sharp")
    out.poly = hirsch_sharp(get_count(recipe, "dim"), get_count(recipe, "facets"),
                            parse_route(recipe.value("route", std::string("auto"))));
  else if (kind == "transportation") {
    const QVector rows = get_rationals(recipe, "rows"), cols = get_rationals(recipe, "cols");
    out.poly = recipe.value("reduced", true) ? transportation(rows, cols) : transportation_system(rows, cols);
  } else if (kind == "zeroone") {
    if (!recipe.contains("seed") || !non_negative_integer(recipe["seed"]))
      throw InvalidArgument("recipe needs a seed");
    out.poly = random_01_polytope(get_count(recipe, "dim"), get_count(recipe, "points"),
                                  recipe["seed"].get<std::uint64_t>());
  } else if (kind == "product") {
    out.poly = product(as_hrep(run_recipe(get_input(recipe, "left"))),
                       as_hrep(run_recipe(get_input(recipe, "right"))));
  } else if (kind == "wedge") {
    out.poly = wedge_op(as_hrep(run_recipe(get_input(recipe))), get_count(recipe, "facet"));
  } else if (kind == "unbound") {
    out.poly = unbound_op(as_hrep(run_recipe(get_input(recipe))), get_count(recipe, "facet"));
  } else if (kind == "truncate") {
    if (!recipe.contains("vertex") || !recipe["vertex"].is_string())
      throw InvalidArgument("recipe needs a string 'vertex'");
    out.poly = truncate_op(as_hrep(run_recipe(get_input(recipe))), recipe["vertex"].get<std::string>());
  } else if (kind == "polar") {
    out.poly = polar_op(run_recipe(get_input(recipe))).h;
  } else if (kind == "convert") {
    const PolyFile input = run_recipe(get_input(recipe));
    const std::string to = recipe.value("to", std::string());
    if (to == "h") out.poly = as_hrep(input);
    else if (to == "v") out.poly = as_vrep(input);
    else throw InvalidArgument("convert recipe needs 'to' of h or v");
  } else {
    throw InvalidArgument("unknown recipe kind '" + kind + "'");
  }
  return out;
}

std::optional<nlohmann::json> derived_recipe(const PolyFile& input, nlohmann::json step) {
  if (!input.recipe) return std::nullopt;
  step["input"] = *input.recipe;
  return step;
}

}  // namespace hirsch
