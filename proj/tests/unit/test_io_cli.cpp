#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hirsch/cli.hpp"
#include "hirsch/constructions.hpp"
#include "hirsch/errors.hpp"
#include "hirsch/io.hpp"
#include "hirsch/polyhedron.hpp"
#include "hirsch/recipe.hpp"

using namespace hirsch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = execute(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hirsch_test_" + name)).string();
}

}  // namespace

TEST_CASE("H-file round trip with linearity, labels and recipe") {
  HPolyhedron h = transportation_system({1, 2}, {2, 1});
  std::ostringstream out;
  write_hfile(out, h, nlohmann::json{{"kind", "transportation"}});
  const PolyFile f = read_polyfile(out.str());
  REQUIRE(f.is_h());
  CHECK(f.h() == h);
  CHECK(f.recipe == nlohmann::json{{"kind", "transportation"}});
  CHECK(out.str().find("linearity 4 5 6 7 8\n") != std::string::npos);
}

TEST_CASE("V-file round trip with rays") {
  VPolyhedron v;
  v.d = 2;
  v.vertices = {{0, 0}, {ratio(1, 2), -3}};
  v.rays = {{1, 0}};
  std::ostringstream out;
  write_vfile(out, v);
  CHECK(out.str() == "V-representation\nbegin\n3 3 rational\n1 0 0\n1 1/2 -3\n0 1 0\nend\n");
  const PolyFile f = read_polyfile(out.str());
  REQUIRE_FALSE(f.is_h());
  CHECK(f.v() == v);
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(read_polyfile("H-representation\n2 2 rational\n"), ParseError);
  CHECK_THROWS_AS(read_polyfile("H-representation\nbegin\n1 2 rational\n0 1\n"), ParseError);
  CHECK_THROWS_AS(read_polyfile("H-representation\nbegin\n2 2 rational\n0 1\nend\n"), ParseError);
  CHECK_THROWS_AS(read_polyfile("H-representation\nbegin\n1 2 rational\n0 0.5\nend\n"), ParseError);
  CHECK_THROWS_AS(read_polyfile("V-representation\nbegin\n1 2 rational\n2 1\nend\n"), ParseError);
  CHECK_THROWS_AS(read_polyfile("# labels: a b\nH-representation\nbegin\n1 2 rational\n0 1\nend\n"), ParseError);
  CHECK_NOTHROW(read_polyfile("* cdd comment\nname\nH-representation\nbegin\n1 2 integer\n0 1\nend\ninput_adjacency\n"));
}

TEST_CASE("recipes replay to identical bytes") {
  const std::vector<nlohmann::json> recipes = {
      {{"kind", "cube"}, {"d", 3}},
      {{"kind", "kleewalkup"}},
      {{"kind", "kleewalkup"}, {"star", true}},
      {{"kind", "zeroone"}, {"dim", 4}, {"points", 9}, {"seed", 12}},
      {{"kind", "hirsch_sharp"}, {"dim", 5}, {"facets", 11}, {"route", "auto"}},
      {{"kind", "transportation"}, {"rows", {"2", "1"}}, {"cols", {"1", "1", "1"}}},
      {{"kind", "wedge"}, {"facet", 2}, {"input", {{"kind", "polygon"}, {"n", 5}}}},
      {{"kind", "truncate"}, {"vertex", "v1"}, {"input", {{"kind", "cube"}, {"d", 3}}}},
      {{"kind", "unbound"}, {"facet", 9}, {"input", {{"kind", "kleewalkup"}}}},
      {{"kind", "polar"}, {"input", {{"kind", "kleewalkup"}, {"star", true}}}},
      {{"kind", "product"}, {"left", {{"kind", "simplex"}, {"d", 2}}}, {"right", {{"kind", "simplex"}, {"d", 2}}}},
      {{"kind", "convert"}, {"to", "v"}, {"input", {{"kind", "crosspolytope"}, {"d", 3}}}},
  };
  for (const auto& r : recipes) {
    CAPTURE(r.dump());
    const std::string first = to_text(run_recipe(r));
    const PolyFile parsed = read_polyfile(first);
    REQUIRE(parsed.recipe);
    CHECK(to_text(run_recipe(*parsed.recipe)) == first);
  }
  CHECK_THROWS_AS(run_recipe({{"kind", "teapot"}}), InvalidArgument);
  CHECK_THROWS_AS(run_recipe({{"kind", "zeroone"}, {"dim", 3}, {"points", 5}}), InvalidArgument);
}

TEST_CASE("gen kleewalkup then check") {
  const std::string path = temp_path("q4.ine");
  REQUIRE(run({"gen", "kleewalkup", "--out", path}).code == 0);
  const Run check = run({"check", path, "--json"});
  REQUIRE(check.code == 0);
  const nlohmann::json r = nlohmann::json::parse(check.out);
  CHECK(r["diameter"] == 5);
  CHECK(r["n"] == 9);
  CHECK(r["d"] == 4);
  for (const char* key : {"n", "d", "bounded", "vertex_count", "diameter", "n_minus_d", "satisfies_hirsch",
                          "hirsch_sharp", "simple", "simplicial", "witness_pair"})
    CHECK(r.contains(key));
  std::remove(path.c_str());
}

TEST_CASE("gen cube 3 piped into diameter") {
  const Run gen = run({"gen", "cube", "3"});
  REQUIRE(gen.code == 0);
  const Run diam = run({"diameter"}, gen.out);
  CHECK(diam.code == 0);
  CHECK(diam.out == "3\n");
}

TEST_CASE("bounds 12 4") {
  const Run text = run({"bounds", "12", "4"});
  CHECK(text.code == 0);
  CHECK(text.out.find("known_exact     7") != std::string::npos);
  const Run json = run({"bounds", "12", "4", "--json"});
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["known_exact"] == 7);
  CHECK(j["lower"] == 7);
  CHECK(j["larman"] == 24);
  CHECK(j["kalai_kleitman"] == 1728.0);
  CHECK(j["hirsch_rhs"] == 8);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "zeroone", "--dim", "3", "--points", "5"}).code == 2);
  CHECK(run({"bounds", "3", "4"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const Run infeasible = run({"check"}, "H-representation\nbegin\n2 2 rational\n-1 1\n-1 -1\nend\n");
  CHECK(infeasible.code == 1);
  CHECK(infeasible.err.find("infeasible") != std::string::npos);
  CHECK(infeasible.out.empty());

  const Run line = run({"graph"}, "H-representation\nbegin\n2 3 rational\n1 1 0\n1 -1 0\nend\n");
  CHECK(line.code == 1);
  CHECK(line.err.find("not pointed") != std::string::npos);

  const std::string q4 = run({"gen", "kleewalkup"}).out;
  CHECK(run({"wedge", "--facet", "10"}, q4).code == 1);
  CHECK(run({"wedge", "--facet", "0"}, q4).code == 1);
  CHECK(run({"check", "/nonexistent/file"}).code == 1);
  CHECK(run({"check"}, "garbage").code == 1);
  CHECK(run({"abstraction", "search", "--n", "6", "--d", "3"}).code == 2);
}

TEST_CASE("wedge pipelines compose for every generator and facet") {
  const std::vector<std::vector<std::string>> gens = {
      {"gen", "simplex", "3"},       {"gen", "cube", "3"},
      {"gen", "crosspolytope", "3"}, {"gen", "polygon", "6"},
      {"gen", "kleewalkup"},         {"gen", "transportation", "--rows", "2,1", "--cols", "1,1,1"},
      {"gen", "zeroone", "--dim", "3", "--points", "6", "--seed", "4"},
      {"gen", "hirschsharp", "--dim", "3", "--facets", "5"},
      {"gen", "orthant", "--dim", "3", "--k", "2"}};
  for (const auto& g : gens) {
    const Run gen = run(g);
    REQUIRE(gen.code == 0);
    const HPolyhedron h = as_hrep(read_polyfile(gen.out));
    const Polytope p = analyze(h);
    for (std::size_t k = 1; k <= h.rows.size(); ++k) {
      CAPTURE(g[1]);
      CAPTURE(k);
      const bool facet = std::any_of(p.facets.begin(), p.facets.end(),
                                     [&](std::size_t f) { return p.source_rows[f] == k - 1; });
      const Run w = run({"wedge", "--facet", std::to_string(k)}, gen.out);
      CHECK(w.code == (facet ? 0 : 1));
      if (facet) CHECK(run({"check"}, w.out).code == 0);
    }
  }
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::string> args = {"gen", "zeroone", "--dim", "4", "--points", "7", "--seed", "3"};
  CHECK(run(args).out == run(args).out);
  const std::string q4 = run({"gen", "kleewalkup"}).out;
  CHECK(run({"check", "--json", "--nonrevisiting"}, q4).out == run({"check", "--json", "--nonrevisiting"}, q4).out);
}

TEST_CASE("graph, dualgraph, distance and operators") {
  const std::string cube = run({"gen", "cube", "3"}).out;
  const Run g = run({"graph"}, cube);
  CHECK(g.out.rfind("8 12\n", 0) == 0);
  const nlohmann::json gj = nlohmann::json::parse(run({"graph", "--json"}, cube).out);
  CHECK(gj["nodes"].size() == 8);
  CHECK(gj["edges"].size() == 12);
  CHECK(run({"dualgraph"}, cube).out.rfind("6 12\n", 0) == 0);

  CHECK(run({"distance", "--from", "v1", "--to", "v8"}, cube).out == "3\n");
  CHECK(run({"distance", "--from", "1", "--to", "8", "--nonrevisiting"}, cube).out == "3\n");
  const nlohmann::json pj = nlohmann::json::parse(run({"distance", "--from", "v1", "--to", "v8", "--json"}, cube).out);
  CHECK(pj["length"] == 3);
  CHECK(pj["path"].size() == 4);
  CHECK(pj["kind"] == "shortest");
  CHECK(run({"distance", "--from", "v1", "--to", "nope"}, cube).code == 1);

  const Run truncated = run({"truncate", "--vertex", "v1"}, cube);
  REQUIRE(truncated.code == 0);
  CHECK(nlohmann::json::parse(run({"check", "--json"}, truncated.out).out)["n"] == 7);

  const Run cv = run({"convert", "--to", "v"}, cube);
  REQUIRE(cv.code == 0);
  const Run back = run({"convert", "--to", "h"}, cv.out);
  CHECK(nlohmann::json::parse(run({"check", "--json"}, back.out).out)["n"] == 6);

  const Run star = run({"gen", "kleewalkup", "--star"});
  const Run polar = run({"polar"}, star.out);
  REQUIRE(polar.code == 0);
  CHECK(polar.err == "translation: 0 0 0 -2\n");
  CHECK(nlohmann::json::parse(run({"check", "--json"}, polar.out).out)["diameter"] == 5);
  // Vertex labels of a V-file survive into the graph.
  CHECK(run({"graph"}, star.out).out.find("a b\n") != std::string::npos);

  const std::string q4 = run({"gen", "kleewalkup"}).out;
  const Run unbound = run({"unbound", "--facet", "9"}, q4);
  REQUIRE(unbound.code == 0);
  const nlohmann::json u = nlohmann::json::parse(run({"check", "--json"}, unbound.out).out);
  CHECK(u["n"] == 8);
  CHECK(u["bounded"] == false);

  const std::string left = temp_path("left.ine");
  std::ofstream(left) << run({"gen", "simplex", "2"}).out;
  const Run prod = run({"product", left, "-"}, run({"gen", "simplex", "2"}).out);
  REQUIRE(prod.code == 0);
  const nlohmann::json pr = nlohmann::json::parse(run({"check", "--json"}, prod.out).out);
  CHECK(pr["d"] == 4);
  CHECK(pr["diameter"] == 2);
  CHECK(read_polyfile(prod.out).recipe->at("kind") == "product");
  std::remove(left.c_str());

  const nlohmann::json mono =
      nlohmann::json::parse(run({"check", "--json", "--monotone", "1,2,3"}, cube).out)["monotone"];
  CHECK(mono["worst_length"] == 3);
}

TEST_CASE("abstraction commands") {
  const Run search = run({"abstraction", "search", "--n", "4", "--d", "2"});
  REQUIRE(search.code == 0);
  CHECK(search.out.rfind("# diameter 3 complete true", 0) == 0);
  CHECK(run({"abstraction", "validate"}, search.out).out == "valid\n");
  const nlohmann::json d = nlohmann::json::parse(run({"abstraction", "diameter", "--json"}, search.out).out);
  CHECK(d["diameter"] == 3);
  CHECK(d["power_respected"] == true);

  const Run from = run({"abstraction", "from"}, run({"gen", "cube", "3"}).out);
  REQUIRE(from.code == 0);
  CHECK(run({"abstraction", "validate"}, from.out).out == "valid\n");

  const Run random = run({"abstraction", "search", "--n", "5", "--d", "2", "--budget", "300", "--seed", "1"});
  CHECK(random.code == 0);
  CHECK(random.out.find("complete false") != std::string::npos);
}
