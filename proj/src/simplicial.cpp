#include "hirsch/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hirsch/errors.hpp"

namespace hirsch {

std::string SimplicialComplex::facet_name(std::size_t f) const {
  const bool short_labels =
      std::all_of(labels.begin(), labels.end(), [](const std::string& s) { return s.size() == 1; });
  std::string name;
  for (std::size_t i = 0; i < facets[f].size(); ++i) {
    if (i > 0 && !short_labels) name += ',';
    name += labels[facets[f][i]];
  }
  return name;
}

std::optional<std::size_t> SimplicialComplex::find_facet(const std::string& name) const {
  for (std::size_t f = 0; f < facets.size(); ++f)
    if (facet_name(f) == name) return f;
  return std::nullopt;
}

std::optional<std::size_t> SimplicialComplex::find_label(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t SimplicialComplex::used_vertex_count() const {
  std::vector<bool> used(labels.size(), false);
  for (const auto& f : facets)
    for (auto x : f) used[x] = true;
  return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
}

SimplicialComplex boundary_complex(const HPolyhedron& h, const VPolyhedron& v, const Incidence& inc) {
  if (!v.bounded()) throw InvalidArgument("boundary complex requires a bounded polytope");
  if (!classify(h, v, inc).simplicial) throw InvalidArgument("polytope is not simplicial");
  SimplicialComplex k;
  for (std::size_t i = 0; i < v.vertices.size(); ++i) k.labels.push_back(v.vertex_label(i));
  for (auto f : facet_rows(h, v, inc)) {
    std::vector<std::size_t> facet;
    for (std::size_t i = 0; i < v.vertices.size(); ++i)
      if (inc.tight(i, f)) facet.push_back(i);
    k.facets.push_back(std::move(facet));
  }
  return k;
}

PolyGraph ridge_graph(const SimplicialComplex& k) {
  std::vector<std::string> names;
  for (std::size_t f = 0; f < k.facets.size(); ++f) names.push_back(k.facet_name(f));
  PolyGraph g(std::move(names));
  // Group facets by each of their ridges.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_ridge;
  for (std::size_t f = 0; f < k.facets.size(); ++f) {
    for (std::size_t drop = 0; drop < k.facets[f].size(); ++drop) {
      std::vector<std::size_t> ridge = k.facets[f];
      ridge.erase(ridge.begin() + static_cast<long>(drop));
      by_ridge[ridge].push_back(f);
    }
  }
  for (const auto& [ridge, owners] : by_ridge)
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) g.add_edge(owners[a], owners[b]);
  return g;
}

SimplicialComplex anti_star(const SimplicialComplex& k, const std::string& label) {
  const auto v = k.find_label(label);
  if (!v) throw InvalidArgument("unknown label '" + label + "'");
  SimplicialComplex out;
  out.labels = k.labels;
  for (const auto& f : k.facets)
    if (!std::binary_search(f.begin(), f.end(), *v)) out.facets.push_back(f);
  return out;
}

PropertyResult dual_nonrevisiting_property(const SimplicialComplex& k, std::size_t budget) {
  std::vector<Bits> sets;
  for (const auto& f : k.facets) {
    Bits b(k.labels.size());
    for (auto x : f) b.set(x);
    sets.push_back(std::move(b));
  }
  const std::size_t cap = k.used_vertex_count() - k.facet_size();
  return nonrevisiting_property(ridge_graph(k), sets, cap, budget);
}

SimplicialComplex read_complex(std::istream& in) {
  SimplicialComplex k;
  std::map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::size_t> facet;
    for (std::string w; words >> w;) {
      auto [it, inserted] = index.emplace(w, k.labels.size());
      if (inserted) k.labels.push_back(w);
      facet.push_back(it->second);
    }
    if (facet.empty()) continue;
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
      throw ParseError("line " + std::to_string(line_no) + ": repeated label in facet");
    if (!k.facets.empty() && facet.size() != k.facet_size())
      throw ParseError("line " + std::to_string(line_no) + ": complex is not pure");
    k.facets.push_back(std::move(facet));
  }
  if (k.facets.empty()) throw ParseError("complex has no facets");
  return k;
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
  for (const auto& f : k.facets) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << k.labels[f[i]];
    out << '\n';
  }
}

}  // namespace hirsch
