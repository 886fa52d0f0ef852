#include "hirsch/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "hirsch/abstraction.hpp"
#include "hirsch/bounds.hpp"
#include "hirsch/constructions.hpp"
#include "hirsch/errors.hpp"
#include "hirsch/io.hpp"
#include "hirsch/paths.hpp"
#include "hirsch/recipe.hpp"

namespace hirsch {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_used = false;

  std::string slurp(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
      if (stdin_used) throw UsageError("standard input can be read only once");
      stdin_used = true;
      buffer << in.rdbuf();
    } else {
      std::ifstream file(path);
      if (!file) throw Error("cannot open '" + path + "'");
      buffer << file.rdbuf();
    }
    return buffer.str();
  }

  PolyFile read(const std::string& path) { return read_polyfile(slurp(path)); }

  void emit(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
      out << data;
      return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot write '" + path + "'");
    file << data;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

QVector parse_list(const std::string& text) {
  QVector out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
  return out;
}

nlohmann::json canonical_list(const std::string& text) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& q : parse_list(text)) j.push_back(to_string(q));
  return j;
}

std::string graph_text(const PolyGraph& g, bool json) {
  if (json) {
    nlohmann::json j;
    j["nodes"] = g.labels();
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({g.label(a), g.label(b)});
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) s << g.label(a) << ' ' << g.label(b) << '\n';
  return s.str();
}

std::string json_scalar(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string report_text(const nlohmann::json& r) {
  static const char* order[] = {"n",           "d",           "bounded",    "vertex_count",
                                "diameter",    "n_minus_d",   "satisfies_hirsch", "hirsch_sharp",
                                "simple",      "simplicial",  "witness_pair", "nonrevisiting",
                                "monotone"};
  std::ostringstream s;
  for (const char* key : order) {
    if (!r.contains(key)) continue;
    s << std::left << std::setw(18) << (std::string(key) + ":") << json_scalar(r[key]) << '\n';
  }
  return s.str();
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

std::string bounds_text(const BoundTable& t) {
  std::ostringstream s;
  auto row = [&](const std::string& key, const std::string& value) {
    s << std::left << std::setw(16) << key << value << '\n';
  };
  row("n", std::to_string(t.n));
  row("d", std::to_string(t.d));
  row("lower", t.lower.get_str());
  row("larman", t.larman ? t.larman->get_str() : "-");
  row("kalai_kleitman", format_double(t.kalai_kleitman));
  row("known_exact", t.known_exact ? t.known_exact->get_str() : "-");
  row("hirsch_rhs", t.hirsch_rhs.get_str());
  return s.str();
}

std::string file_text(PolyFile f) { return to_text(f); }

// Adds the common [FILE] positional and --out option.
struct Io {
  std::string input;
  std::string output;
};

void add_input(CLI::App* sub, Io& io) {
  sub->add_option("file", io.input, "Input file (default: standard input)");
}

void add_output(CLI::App* sub, Io& io) { sub->add_option("-o,--out", io.output, "Output file"); }

}  // namespace

int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io_streams{in, out, err};
  CLI::App app{"Exact polytope graphs, diameters and Hirsch-conjecture constructions", "hirsch"};
  app.require_subcommand(1);
  std::function<void()> action;

  // convert
  Io convert_io;
  std::string convert_to;
  auto* convert = app.add_subcommand("convert", "Convert between H- and V-representation");
  add_input(convert, convert_io);
  add_output(convert, convert_io);
  convert->add_option("--to", convert_to, "Target representation")->required()->check(CLI::IsMember({"h", "v"}));
  convert->callback([&] {
    action = [&] {
      const PolyFile f = io_streams.read(convert_io.input);
      PolyFile result;
      result.poly = convert_to == "h" ? std::variant<HPolyhedron, VPolyhedron>(as_hrep(f))
                                      : std::variant<HPolyhedron, VPolyhedron>(as_vrep(f));
      result.recipe = derived_recipe(f, {{"kind", "convert"}, {"to", convert_to}});
      io_streams.emit(convert_io.output, file_text(result));
    };
  });

  // graph / dualgraph
  Io graph_io;
  bool graph_json = false;
  auto* graph = app.add_subcommand("graph", "Vertex-edge graph (bounded edges only)");
  add_input(graph, graph_io);
  add_output(graph, graph_io);
  graph->add_flag("--json", graph_json, "JSON output");
  graph->callback([&] {
    action = [&] {
      const Polytope p = load_polytope(io_streams.read(graph_io.input));
      io_streams.emit(graph_io.output, graph_text(p.graph, graph_json));
    };
  });

  Io dual_io;
  bool dual_json = false;
  auto* dualgraph = app.add_subcommand("dualgraph", "Facet-ridge graph of a bounded polytope");
  add_input(dualgraph, dual_io);
  add_output(dualgraph, dual_io);
  dualgraph->add_flag("--json", dual_json, "JSON output");
  dualgraph->callback([&] {
    action = [&] {
      const Polytope p = load_polytope(io_streams.read(dual_io.input));
      io_streams.emit(dual_io.output, graph_text(dual_graph(p.h, p.v, p.inc), dual_json));
    };
  });

  // diameter / distance
  Io diam_io;
  bool diam_json = false;
  auto* diam = app.add_subcommand("diameter", "Graph diameter");
  add_input(diam, diam_io);
  diam->add_flag("--json", diam_json, "Print the diameter with a witness path");
  diam->callback([&] {
    action = [&] {
      const Polytope p = load_polytope(io_streams.read(diam_io.input));
      const Diameter d = diameter(p.graph);
      if (!diam_json) {
        out << d.value << '\n';
        return;
      }
      nlohmann::json j;
      j["diameter"] = d.value;
      j["witness"] = to_json(*shortest_path(p.graph, d.u, d.v), p.graph);
      out << j.dump(2) << '\n';
    };
  });

  Io dist_io;
  std::string dist_from, dist_to;
  bool dist_json = false, dist_nonrev = false;
  std::size_t dist_budget = kDefaultSearchBudget;
  auto* dist = app.add_subcommand("distance", "Distance between two vertices");
  add_input(dist, dist_io);
  dist->add_option("--from", dist_from, "Source vertex label or 1-based index")->required();
  dist->add_option("--to", dist_to, "Target vertex label or 1-based index")->required();
  dist->add_flag("--nonrevisiting", dist_nonrev, "Shortest non-revisiting path instead");
  dist->add_option("--budget", dist_budget, "Search state budget");
  dist->add_flag("--json", dist_json, "Print the path report");
  dist->callback([&] {
    action = [&] {
      const Polytope p = load_polytope(io_streams.read(dist_io.input));
      const std::size_t u = resolve_node(p.graph, dist_from), v = resolve_node(p.graph, dist_to);
      std::optional<PathReport> report;
      if (dist_nonrev) {
        const NonrevisitingResult r = nonrevisiting_path(p, u, v, dist_budget);
        if (r.status == SearchStatus::inconclusive) throw Error("search budget exhausted: inconclusive");
        report = r.path;
      } else {
        report = shortest_path(p.graph, u, v);
      }
      if (dist_json) {
        out << (report ? to_json(*report, p.graph) : nlohmann::json(nullptr)).dump(2) << '\n';
      } else {
        out << (report ? std::to_string(report->length) : std::string("none")) << '\n';
      }
    };
  });

  // operators
  Io wedge_io;
  std::size_t wedge_facet = 0;
  auto* wedge_cmd = app.add_subcommand("wedge", "Wedge over a facet");
  add_input(wedge_cmd, wedge_io);
  add_output(wedge_cmd, wedge_io);
  wedge_cmd->add_option("--facet", wedge_facet, "1-based row index")->required();
  wedge_cmd->callback([&] {
    action = [&] {
      const PolyFile f = io_streams.read(wedge_io.input);
      PolyFile r;
      r.poly = wedge_op(as_hrep(f), wedge_facet);
      r.recipe = derived_recipe(f, {{"kind", "wedge"}, {"facet", wedge_facet}});
      io_streams.emit(wedge_io.output, file_text(r));
    };
  });

  Io product_io;
  std::string product_left, product_right;
  auto* product_cmd = app.add_subcommand("product", "Cartesian product of two polytopes");
  product_cmd->add_option("left", product_left, "First factor ('-' for standard input)")->required();
  product_cmd->add_option("right", product_right, "Second factor")->required();
  add_output(product_cmd, product_io);
  product_cmd->callback([&] {
    action = [&] {
      const PolyFile a = io_streams.read(product_left), b = io_streams.read(product_right);
      PolyFile r;
      r.poly = product(as_hrep(a), as_hrep(b));
      if (a.recipe && b.recipe)
        r.recipe = nlohmann::json{{"kind", "product"}, {"left", *a.recipe}, {"right", *b.recipe}};
      io_streams.emit(product_io.output, file_text(r));
    };
  });

  Io trunc_io;
  std::string trunc_vertex;
  auto* trunc = app.add_subcommand("truncate", "Cut off a simple vertex through its edge midpoints");
  add_input(trunc, trunc_io);
  add_output(trunc, trunc_io);
  trunc->add_option("--vertex", trunc_vertex, "Vertex label or 1-based index")->required();
  trunc->callback([&] {
    action = [&] {
      const PolyFile f = io_streams.read(trunc_io.input);
      PolyFile r;
      r.poly = truncate_op(as_hrep(f), trunc_vertex);
      r.recipe = derived_recipe(f, {{"kind", "truncate"}, {"vertex", trunc_vertex}});
      io_streams.emit(trunc_io.output, file_text(r));
    };
  });

  Io polar_io;
  auto* polar_cmd = app.add_subcommand("polar", "Polar polytope after centering the vertex centroid");
  add_input(polar_cmd, polar_io);
  add_output(polar_cmd, polar_io);
  polar_cmd->callback([&] {
    action = [&] {
      const PolyFile f = io_streams.read(polar_io.input);
      const PolarResult pr = polar_op(f);
      err << "translation:";
      for (const auto& x : pr.translation) err << ' ' << to_string(x);
      err << '\n';
      PolyFile r;
      r.poly = pr.h;
      r.recipe = derived_recipe(f, {{"kind", "polar"}});
      io_streams.emit(polar_io.output, file_text(r));
    };
  });

  Io unbound_io;
  std::size_t unbound_facet = 0;
  auto* unbound = app.add_subcommand("unbound", "Send a facet to infinity by a projective map");
  add_input(unbound, unbound_io);
  add_output(unbound, unbound_io);
  unbound->add_option("--facet", unbound_facet, "1-based row index")->required();
  unbound->callback([&] {
    action = [&] {
      const PolyFile f = io_streams.read(unbound_io.input);
      PolyFile r;
      r.poly = unbound_op(as_hrep(f), unbound_facet);
      r.recipe = derived_recipe(f, {{"kind", "unbound"}, {"facet", unbound_facet}});
      io_streams.emit(unbound_io.output, file_text(r));
    };
  });

  // gen
  Io gen_io;
  auto* gen = app.add_subcommand("gen", "Generate a polytope");
  gen->require_subcommand(1);
  gen->fallthrough();
  add_output(gen, gen_io);
  nlohmann::json gen_recipe;
  auto run_gen = [&] {
    action = [&] { io_streams.emit(gen_io.output, file_text(run_recipe(gen_recipe))); };
  };
  std::size_t gen_d = 0;
  for (const char* name : {"simplex", "cube", "crosspolytope"}) {
    auto* sub = gen->add_subcommand(name, std::string("Canonical ") + name);
    sub->add_option("d", gen_d, "Dimension")->required();
    sub->callback([&, name] {
      gen_recipe = {{"kind", name}, {"d", gen_d}};
      run_gen();
    });
  }
  std::size_t gen_n = 0;
  auto* gen_polygon = gen->add_subcommand("polygon", "Convex n-gon on the parabola");
  gen_polygon->add_option("n", gen_n, "Number of vertices")->required();
  gen_polygon->callback([&] {
    gen_recipe = {{"kind", "polygon"}, {"n", gen_n}};
    run_gen();
  });
  bool gen_star = false;
  auto* gen_kw = gen->add_subcommand("kleewalkup", "Klee-Walkup polytope Q4 (or its polar with --star)");
  gen_kw->add_flag("--star", gen_star, "Emit the nine labeled points of Q4* instead");
  gen_kw->callback([&] {
    gen_recipe = {{"kind", "kleewalkup"}};
    if (gen_star) gen_recipe["star"] = true;
    run_gen();
  });
  std::string gen_rows, gen_cols;
  bool gen_unreduced = false;
  auto* gen_tp = gen->add_subcommand("transportation", "Transportation polytope");
  gen_tp->add_option("--rows", gen_rows, "Row sums a1,a2,...")->required();
  gen_tp->add_option("--cols", gen_cols, "Column sums b1,b2,...")->required();
  gen_tp->add_flag("--unreduced", gen_unreduced, "Keep the pq variables and equality rows");
  gen_tp->callback([&] {
    gen_recipe = {{"kind", "transportation"}, {"rows", canonical_list(gen_rows)}, {"cols", canonical_list(gen_cols)}};
    if (gen_unreduced) gen_recipe["reduced"] = false;
    run_gen();
  });
  std::size_t gen_dim = 0, gen_points = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_01 = gen->add_subcommand("zeroone", "Random 0/1 polytope (V-representation)");
  gen_01->add_option("--dim", gen_dim, "Dimension")->required();
  gen_01->add_option("--points", gen_points, "Number of distinct points")->required();
  gen_01->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen_01->callback([&] {
    gen_recipe = {{"kind", "zeroone"}, {"dim", gen_dim}, {"points", gen_points}, {"seed", gen_seed}};
    run_gen();
  });
  std::size_t gen_facets = 0;
  std::string gen_route = "auto";
  auto* gen_hs = gen->add_subcommand("hirschsharp", "Polytope with diameter exactly n - d");
  gen_hs->add_option("--dim", gen_dim, "Dimension d")->required();
  gen_hs->add_option("--facets", gen_facets, "Facet count n")->required();
  gen_hs->add_option("--route", gen_route, "auto, products or kleewalkup")
      ->check(CLI::IsMember({"auto", "products", "kleewalkup"}));
  gen_hs->callback([&] {
    gen_recipe = {{"kind", "hirsch_sharp"}, {"dim", gen_dim}, {"facets", gen_facets}, {"route", gen_route}};
    run_gen();
  });
  std::size_t gen_k = 0;
  auto* gen_orth = gen->add_subcommand("orthant", "Orthant cut by k generic functionals");
  gen_orth->add_option("--dim", gen_dim, "Dimension")->required();
  gen_orth->add_option("--k", gen_k, "Number of functionals")->required();
  gen_orth->callback([&] {
    gen_recipe = {{"kind", "orthant"}, {"dim", gen_dim}, {"k", gen_k}};
    run_gen();
  });

  // check
  Io check_io;
  bool check_nonrev = false, check_json = false;
  std::string check_monotone;
  std::size_t check_budget = kDefaultSearchBudget;
  auto* check = app.add_subcommand("check", "Hirsch report");
  add_input(check, check_io);
  check->add_flag("--nonrevisiting", check_nonrev, "Also test the non-revisiting path property");
  check->add_option("--monotone", check_monotone, "Objective c1,c2,... for monotone path lengths");
  check->add_option("--budget", check_budget, "Search state budget");
  check->add_flag("--json", check_json, "JSON output");
  check->callback([&] {
    action = [&] {
      ReportOptions options;
      options.nonrevisiting = check_nonrev;
      options.budget = check_budget;
      if (!check_monotone.empty()) options.monotone = parse_list(check_monotone);
      const nlohmann::json r = hirsch_report(load_polytope(io_streams.read(check_io.input)), options);
      out << (check_json ? r.dump(2) + "\n" : report_text(r));
    };
  });

  // bounds
  std::size_t bounds_n = 0, bounds_d = 0;
  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Known bounds on the maximum diameter H(n, d)");
  bounds->add_option("n", bounds_n, "Facet count")->required();
  bounds->add_option("d", bounds_d, "Dimension")->required();
  bounds->add_flag("--json", bounds_json, "JSON output");
  bounds->callback([&] {
    action = [&] {
      const BoundTable t = bound_table(bounds_n, bounds_d);
      out << (bounds_json ? to_json(t).dump(2) + "\n" : bounds_text(t));
    };
  });

  // abstraction
  auto* abs = app.add_subcommand("abstraction", "Subset-graph abstraction");
  abs->require_subcommand(1);
  Io abs_io;
  bool abs_json = false;
  auto* abs_validate = abs->add_subcommand("validate", "Check the layer connectivity property");
  add_input(abs_validate, abs_io);
  abs_validate->add_flag("--json", abs_json, "JSON output");
  abs_validate->callback([&] {
    action = [&] {
      std::istringstream text(io_streams.slurp(abs_io.input));
      const SubsetFamilyGraph g = read_subset_graph(text);
      const LayerCheck c = validate_layer_property(g);
      nlohmann::json j;
      j["valid"] = c.valid;
      j["witness"] = c.witness ? nlohmann::json{g.graph.label(c.witness->first), g.graph.label(c.witness->second)}
                               : nlohmann::json(nullptr);
      if (abs_json) out << j.dump(2) << '\n';
      else if (c.valid) out << "valid\n";
      else out << "invalid " << g.graph.label(c.witness->first) << ' ' << g.graph.label(c.witness->second) << '\n';
    };
  });
  auto* abs_diam = abs->add_subcommand("diameter", "Diameter and the two upper bounds");
  add_input(abs_diam, abs_io);
  abs_diam->add_flag("--json", abs_json, "JSON output");
  abs_diam->callback([&] {
    action = [&] {
      std::istringstream text(io_streams.slurp(abs_io.input));
      const SubsetDiameter sd = subset_graph_diameter(read_subset_graph(text));
      nlohmann::json j;
      j["diameter"] = sd.value;
      j["power_bound"] = sd.power_bound;
      j["linear_bound"] = sd.linear_bound.get_str();
      j["power_respected"] = sd.power_respected;
      j["linear_respected"] = sd.linear_respected;
      if (abs_json) out << j.dump(2) << '\n';
      else
        out << "diameter     " << sd.value << "\npower_bound  " << format_double(sd.power_bound)
            << "\nlinear_bound " << sd.linear_bound.get_str() << '\n';
    };
  });
  auto* abs_from = abs->add_subcommand("from", "Subset graph of a simple polytope");
  add_input(abs_from, abs_io);
  add_output(abs_from, abs_io);
  abs_from->callback([&] {
    action = [&] {
      std::ostringstream s;
      write_subset_graph(s, from_simple_polytope(load_polytope(io_streams.read(abs_io.input))));
      io_streams.emit(abs_io.output, s.str());
    };
  });
  std::size_t search_n = 0, search_d = 0;
  std::uint64_t search_budget = 1'000'000;
  std::optional<std::uint64_t> search_seed;
  auto* abs_search = abs->add_subcommand("search", "Search for a large-diameter valid subset graph");
  abs_search->add_option("--n", search_n, "Ground set size (<= 8)")->required();
  abs_search->add_option("--d", search_d, "Subset size (<= 3)")->required();
  abs_search->add_option("--budget", search_budget, "Candidate budget");
  abs_search->add_option("--seed", search_seed, "PRNG seed (required when the search is randomized)");
  add_output(abs_search, abs_io);
  abs_search->callback([&] {
    action = [&] {
      if (search_d < 1 || search_d > search_n || search_n > 8 || search_d > 3)
        throw InvalidArgument("search is limited to 1 <= d <= n, n <= 8, d <= 3");
      if (search_space_size(search_n, search_d) > search_budget && !search_seed)
        throw UsageError("randomized search requires --seed");
      const SearchResult r = search_max_diameter(search_n, search_d, search_budget, search_seed);
      std::ostringstream s;
      s << "# diameter " << r.diameter << " complete " << (r.complete ? "true" : "false") << " explored "
        << r.explored << '\n';
      write_subset_graph(s, r.best);
      io_streams.emit(abs_io.output, s.str());
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (action) action();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hirsch
