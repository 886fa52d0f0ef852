#include "hirsch/abstraction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hirsch/bounds.hpp"
#include "hirsch/errors.hpp"

namespace hirsch {

std::string subset_label(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

SubsetFamilyGraph SubsetFamilyGraph::make(std::size_t n, std::size_t d, std::vector<Subset> nodes,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::set<Subset> seen;
  std::vector<std::string> names;
  for (const auto& s : nodes) {
    if (s.size() != d) throw InvalidArgument("node " + subset_label(s) + " does not have d elements");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n) throw InvalidArgument("node " + subset_label(s) + " leaves 1..n");
      if (i > 0 && s[i - 1] >= s[i]) throw InvalidArgument("node " + subset_label(s) + " is not sorted");
    }
    if (!seen.insert(s).second) throw InvalidArgument("duplicate node " + subset_label(s));
    names.push_back(subset_label(s));
  }
  SubsetFamilyGraph g;
  g.n = n;
  g.d = d;
  g.graph = PolyGraph(std::move(names));
  for (const auto& [a, b] : edges) {
    if (a >= nodes.size() || b >= nodes.size() || a == b) throw InvalidArgument("bad edge");
    g.graph.add_edge(a, b);
  }
  g.nodes = std::move(nodes);
  return g;
}

namespace {

Subset intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const Subset& big, const Subset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Component id of every node in the subgraph induced on nodes containing `core`
// (kUnreachable for nodes outside it).
std::vector<std::size_t> filtered_components(const SubsetFamilyGraph& g, const Subset& core) {
  const std::size_t n = g.nodes.size();
  std::vector<std::size_t> comp(n, kUnreachable);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != kUnreachable || !contains(g.nodes[s], core)) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (auto y : g.graph.neighbors(x)) {
        if (comp[y] != kUnreachable || !contains(g.nodes[y], core)) continue;
        comp[y] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

LayerCheck validate_layer_property(const SubsetFamilyGraph& g) {
  LayerCheck out;
  std::map<Subset, std::vector<std::size_t>> cache;
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    for (std::size_t v = u + 1; v < g.nodes.size(); ++v) {
      const Subset core = intersect(g.nodes[u], g.nodes[v]);
      auto it = cache.find(core);
      if (it == cache.end()) it = cache.emplace(core, filtered_components(g, core)).first;
      if (it->second[u] != it->second[v]) {
        out.valid = false;
        out.witness = {u, v};
        return out;
      }
    }
  }
  return out;
}

SubsetFamilyGraph from_simple_polytope(const Polytope& p) {
  if (!p.bounded()) throw InvalidArgument("subset graph requires a bounded polytope");
  if (!classify(p.h, p.v, p.inc).simple) throw InvalidArgument("polytope is not simple");
  std::vector<Subset> nodes;
  for (std::size_t k = 0; k < p.v.vertices.size(); ++k) {
    const Bits tight = p.facet_set(k);
    Subset s;
    for (auto f = tight.find_first(); f != Bits::npos; f = tight.find_next(f)) s.push_back(f + 1);
    nodes.push_back(std::move(s));
  }
  return SubsetFamilyGraph::make(p.facets.size(), p.dim(), std::move(nodes), p.graph.edges());
}

SubsetDiameter subset_graph_diameter(const SubsetFamilyGraph& g) {
  SubsetDiameter out;
  out.value = diameter(g.graph).value;
  const Integer value(static_cast<unsigned long>(out.value));
  out.linear_bound = linear_subset_bound(g.n, g.d);
  out.linear_respected = value <= out.linear_bound;
  out.power_respected = kalai_kleitman_at_least(g.n, g.d, value);
  out.power_bound = kalai_kleitman_value(g.n, g.d);
  return out;
}

namespace {

std::vector<Subset> all_subsets(std::size_t n, std::size_t d) {
  std::vector<Subset> out;
  Subset s(d);
  for (std::size_t i = 0; i < d; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    std::size_t i = d;
    while (i > 0 && s[i - 1] == n - d + i) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < d; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Candidate {
  std::vector<std::size_t> chosen;  // indices into the full subset list
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

class Tracker {
 public:
  Tracker(std::size_t n, std::size_t d, const std::vector<Subset>& all) : n_(n), d_(d), all_(all) {}

  void offer(const Candidate& c) {
    ++result.explored;
    std::vector<Subset> nodes;
    for (auto i : c.chosen) nodes.push_back(all_[i]);
    SubsetFamilyGraph g = SubsetFamilyGraph::make(n_, d_, std::move(nodes), c.edges);
    if (!validate_layer_property(g).valid) return;
    const std::size_t value = diameter(g.graph).value;
    if (!found_ || value > result.diameter) {
      found_ = true;
      result.diameter = value;
      result.best = std::move(g);
    }
  }

  SearchResult result;

 private:
  std::size_t n_, d_;
  const std::vector<Subset>& all_;
  bool found_ = false;
};

}  // namespace

std::uint64_t search_space_size(std::size_t n, std::size_t d) {
  const std::uint64_t nodes = binomial(n, d);
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= nodes; ++k) {
    const std::uint64_t pairs = k * (k - 1) / 2;
    const std::uint64_t edge_sets = pairs >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << pairs;
    total = saturating_add(total, saturating_mul(binomial(nodes, k), edge_sets));
  }
  return total;
}

SearchResult search_max_diameter(std::size_t n, std::size_t d, std::uint64_t budget,
                                 std::optional<std::uint64_t> seed) {
  if (d < 1 || d > n) throw InvalidArgument("need 1 <= d <= n");
  if (n > 8 || d > 3) throw InvalidArgument("search is limited to n <= 8 and d <= 3");
  const std::vector<Subset> all = all_subsets(n, d);
  Tracker tracker(n, d, all);
  const std::size_t m = all.size();

  if (search_space_size(n, d) <= budget) {
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<std::size_t> chosen(k);
      for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
      while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
          Candidate c{chosen, {}};
          for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1) c.edges.push_back(pairs[e]);
          tracker.offer(c);
        }
        std::size_t i = k;
        while (i > 0 && chosen[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++chosen[i - 1];
        for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
      }
    }
    tracker.result.complete = true;
    return std::move(tracker.result);
  }

  if (!seed) throw InvalidArgument("randomized search requires a seed");
  std::mt19937_64 engine(*seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    Candidate c;
    for (std::size_t i = 0; i < m; ++i)
      if (engine() & 1) c.chosen.push_back(i);
    if (c.chosen.empty()) c.chosen.push_back(engine() % m);
    const double density = unit(engine);
    for (std::size_t a = 0; a < c.chosen.size(); ++a)
      for (std::size_t b = a + 1; b < c.chosen.size(); ++b)
        if (unit(engine) < density) c.edges.emplace_back(a, b);
    tracker.offer(c);
  }
  return std::move(tracker.result);
}

SubsetFamilyGraph read_subset_graph(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty subset-graph file");
  std::size_t n = 0, d = 0;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n >> d)) throw ParseError("expected header 'n d'");
  }
  std::vector<Subset> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool in_edges = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream words(lines[i]);
    std::string first;
    words >> first;
    if (first == "edges:") {
      in_edges = true;
      continue;
    }
    std::istringstream all(lines[i]);
    std::vector<long> values;
    for (std::string w; all >> w;) {
      try {
        std::size_t used = 0;
        values.push_back(std::stol(w, &used));
        if (used != w.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + w + "' in subset-graph file");
      }
    }
    for (auto x : values)
      if (x < 1) throw ParseError("indices are 1-based");
    if (in_edges) {
      if (values.size() != 2) throw ParseError("edge lines need two node indices");
      edges.emplace_back(values[0] - 1, values[1] - 1);
    } else {
      Subset s(values.begin(), values.end());
      std::sort(s.begin(), s.end());
      nodes.push_back(std::move(s));
    }
  }
  try {
    return SubsetFamilyGraph::make(n, d, std::move(nodes), edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

void write_subset_graph(std::ostream& out, const SubsetFamilyGraph& g) {
  out << g.n << ' ' << g.d << '\n';
  for (const auto& s : g.nodes) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  out << "edges:\n";
  for (const auto& [a, b] : g.graph.edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace hirsch
