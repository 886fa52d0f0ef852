#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hirsch/abstraction.hpp"
#include "hirsch/bounds.hpp"
#include "hirsch/cli.hpp"
#include "hirsch/constructions.hpp"
#include "hirsch/errors.hpp"
#include "hirsch/io.hpp"
#include "hirsch/paths.hpp"
#include "hirsch/recipe.hpp"

namespace py = pybind11;
using namespace hirsch;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::handle& obj) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

QVector to_qvector(const std::vector<std::string>& values) {
  QVector out;
  for (const auto& s : values) out.push_back(parse_rational(s));
  return out;
}

py::dict graph_dict(const PolyGraph& g) {
  py::list edges;
  for (const auto& [a, b] : g.edges()) edges.append(py::make_tuple(g.label(a), g.label(b)));
  py::dict d;
  d["nodes"] = g.labels();
  d["edges"] = edges;
  return d;
}

PolyFile with_recipe(std::variant<HPolyhedron, VPolyhedron> poly, std::optional<nlohmann::json> recipe) {
  PolyFile f;
  f.poly = std::move(poly);
  f.recipe = std::move(recipe);
  return f;
}

}  // namespace

PYBIND11_MODULE(hirsch, m) {
  m.doc() = "Exact polytope graphs, diameters and Hirsch-type constructions";

  auto base = py::register_exception<Error>(m, "HirschError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<NotPointedError>(m, "NotPointedError", base.ptr());
  py::register_exception<DisconnectedError>(m, "DisconnectedError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());

  py::class_<PolyFile>(m, "PolyFile", "An H- or V-representation with optional recipe")
      .def_static("parse", py::overload_cast<const std::string&>(&read_polyfile), py::arg("text"))
      .def_static(
          "from_recipe", [](const py::dict& recipe) { return run_recipe(from_python(recipe)); }, py::arg("recipe"))
      .def_property_readonly("is_h", &PolyFile::is_h)
      .def_property_readonly("recipe",
                             [](const PolyFile& f) { return f.recipe ? to_python(*f.recipe) : py::object(py::none()); })
      .def("text", &to_text)
      .def("__str__", &to_text)
      .def("__repr__", [](const PolyFile& f) { return std::string(f.is_h() ? "<PolyFile H>" : "<PolyFile V>"); });

  m.def(
      "generate",
      [](const std::string& kind, const py::kwargs& params) {
        nlohmann::json recipe = from_python(params);
        recipe["kind"] = kind;
        return run_recipe(recipe);
      },
      py::arg("kind"), "Build a polytope from a generator kind and its recipe parameters");

  m.def(
      "convert",
      [](const PolyFile& f, const std::string& to) {
        if (to != "h" && to != "v") throw InvalidArgument("target must be 'h' or 'v'");
        std::variant<HPolyhedron, VPolyhedron> poly;
        if (to == "h") poly = as_hrep(f);
        else poly = as_vrep(f);
        return with_recipe(std::move(poly), derived_recipe(f, {{"kind", "convert"}, {"to", to}}));
      },
      py::arg("poly"), py::arg("to"));

  m.def(
      "wedge",
      [](const PolyFile& f, std::size_t facet) {
        return with_recipe(wedge_op(as_hrep(f), facet), derived_recipe(f, {{"kind", "wedge"}, {"facet", facet}}));
      },
      py::arg("poly"), py::arg("facet"), "Wedge over a facet (1-based row index)");
  m.def(
      "product",
      [](const PolyFile& a, const PolyFile& b) {
        std::optional<nlohmann::json> recipe;
        if (a.recipe && b.recipe) recipe = nlohmann::json{{"kind", "product"}, {"left", *a.recipe}, {"right", *b.recipe}};
        return with_recipe(product(as_hrep(a), as_hrep(b)), recipe);
      },
      py::arg("left"), py::arg("right"));
  m.def(
      "truncate",
      [](const PolyFile& f, const std::string& vertex) {
        return with_recipe(truncate_op(as_hrep(f), vertex),
                           derived_recipe(f, {{"kind", "truncate"}, {"vertex", vertex}}));
      },
      py::arg("poly"), py::arg("vertex"));
  m.def(
      "unbound",
      [](const PolyFile& f, std::size_t facet) {
        return with_recipe(unbound_op(as_hrep(f), facet), derived_recipe(f, {{"kind", "unbound"}, {"facet", facet}}));
      },
      py::arg("poly"), py::arg("facet"));
  m.def(
      "polar",
      [](const PolyFile& f) {
        const PolarResult r = polar_op(f);
        std::vector<std::string> translation;
        for (const auto& x : r.translation) translation.push_back(to_string(x));
        return py::make_tuple(with_recipe(r.h, derived_recipe(f, {{"kind", "polar"}})), translation);
      },
      py::arg("poly"), "Polar polytope and the translation applied first");

  m.def(
      "graph", [](const PolyFile& f) { return graph_dict(load_polytope(f).graph); }, py::arg("poly"));
  m.def(
      "dual_graph",
      [](const PolyFile& f) {
        const Polytope p = load_polytope(f);
        return graph_dict(dual_graph(p.h, p.v, p.inc));
      },
      py::arg("poly"));
  m.def(
      "diameter",
      [](const PolyFile& f) {
        const Polytope p = load_polytope(f);
        const Diameter d = diameter(p.graph);
        nlohmann::json j;
        j["diameter"] = d.value;
        j["witness"] = to_json(*shortest_path(p.graph, d.u, d.v), p.graph);
        return to_python(j);
      },
      py::arg("poly"));
  m.def(
      "distance",
      [](const PolyFile& f, const std::string& source, const std::string& target, bool nonrevisiting,
         std::size_t budget) -> py::object {
        const Polytope p = load_polytope(f);
        const std::size_t u = resolve_node(p.graph, source), v = resolve_node(p.graph, target);
        std::optional<PathReport> report;
        if (nonrevisiting) {
          const NonrevisitingResult r = nonrevisiting_path(p, u, v, budget);
          if (r.status == SearchStatus::inconclusive) throw Error("search budget exhausted: inconclusive");
          report = r.path;
        } else {
          report = shortest_path(p.graph, u, v);
        }
        return report ? to_python(to_json(*report, p.graph)) : py::object(py::none());
      },
      py::arg("poly"), py::arg("source"), py::arg("target"), py::arg("nonrevisiting") = false,
      py::arg("budget") = kDefaultSearchBudget, "Path report, or None when no path exists");
  m.def(
      "check",
      [](const PolyFile& f, bool nonrevisiting, std::optional<std::vector<std::string>> monotone, std::size_t budget) {
        ReportOptions options;
        options.nonrevisiting = nonrevisiting;
        if (monotone) options.monotone = to_qvector(*monotone);
        options.budget = budget;
        return to_python(hirsch_report(load_polytope(f), options));
      },
      py::arg("poly"), py::arg("nonrevisiting") = false, py::arg("monotone") = py::none(),
      py::arg("budget") = kDefaultSearchBudget, "Hirsch report; monotone takes the objective as rational strings");

  m.def(
      "bounds", [](std::size_t n, std::size_t d) { return to_python(to_json(bound_table(n, d))); }, py::arg("n"),
      py::arg("d"));
  m.def(
      "kalai_kleitman_at_least",
      [](std::size_t n, std::size_t d, const std::string& k) { return kalai_kleitman_at_least(n, d, Integer(k)); },
      py::arg("n"), py::arg("d"), py::arg("k"), "Exact test of n^(log2 d + 1) >= k; k is a decimal string");

  m.def(
      "subset_search",
      [](std::size_t n, std::size_t d, std::uint64_t budget, std::optional<std::uint64_t> seed) {
        const SearchResult r = search_max_diameter(n, d, budget, seed);
        std::ostringstream text;
        write_subset_graph(text, r.best);
        py::dict out;
        out["diameter"] = r.diameter;
        out["complete"] = r.complete;
        out["explored"] = r.explored;
        out["graph"] = text.str();
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("budget") = 1'000'000, py::arg("seed") = py::none());
  m.def(
      "subset_diameter",
      [](const std::string& text) {
        std::istringstream in(text);
        const SubsetFamilyGraph g = read_subset_graph(in);
        const LayerCheck c = validate_layer_property(g);
        py::dict out;
        out["valid"] = c.valid;
        if (!c.valid) return out;
        const SubsetDiameter sd = subset_graph_diameter(g);
        out["diameter"] = sd.value;
        out["power_bound"] = sd.power_bound;
        out["linear_bound"] = sd.linear_bound.get_str();
        out["power_respected"] = sd.power_respected;
        out["linear_respected"] = sd.linear_respected;
        return out;
      },
      py::arg("text"), "Layer validation and diameter of a subset-graph file");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = execute(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "", "Run a command line in-process; returns (exit code, stdout, stderr)");
}
