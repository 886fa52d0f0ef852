#include "hirsch/paths.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "hirsch/errors.hpp"

namespace hirsch {

std::vector<std::size_t> bfs_distances(const PolyGraph& g, std::size_t source) {
  if (source >= g.size()) throw InvalidArgument("unknown source node");
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (auto y : g.neighbors(x)) {
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

Diameter diameter(const PolyGraph& g) {
  Diameter best;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (dist[v] == kUnreachable) throw DisconnectedError();
      if (dist[v] > best.value) best = {dist[v], u, v};
    }
  }
  return best;
}

namespace {

const char* kind_name(PathKind k) {
  switch (k) {
    case PathKind::shortest: return "shortest";
    case PathKind::nonrevisiting: return "non-revisiting";
    case PathKind::monotone: return "monotone";
  }
  return "?";
}

}  // namespace

nlohmann::json to_json(const PathReport& report, const PolyGraph& g) {
  nlohmann::json path = nlohmann::json::array();
  for (auto x : report.path) path.push_back(g.label(x));
  return {{"source", g.label(report.source)},
          {"target", g.label(report.target)},
          {"length", report.length},
          {"path", path},
          {"kind", kind_name(report.kind)}};
}

std::optional<PathReport> shortest_path(const PolyGraph& g, std::size_t source, std::size_t target) {
  if (target >= g.size()) throw InvalidArgument("unknown target node");
  const auto dist = bfs_distances(g, target);
  if (dist[source] == kUnreachable) return std::nullopt;
  PathReport r{source, target, dist[source], {source}, PathKind::shortest};
  std::size_t x = source;
  while (x != target) {
    for (auto y : g.neighbors(x))
      if (dist[y] + 1 == dist[x]) {
        x = y;
        break;
      }
    r.path.push_back(x);
  }
  return r;
}

namespace {

struct BudgetExceeded {};

class NonrevisitingDfs {
 public:
  NonrevisitingDfs(const PolyGraph& g, const std::vector<Bits>& sets, std::size_t target,
                   std::size_t budget)
      : g_(g), sets_(sets), target_(target), budget_(budget), to_target_(bfs_distances(g, target)) {
    order_.resize(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      order_[x] = g.neighbors(x);
      std::stable_sort(order_[x].begin(), order_[x].end(),
                       [&](std::size_t a, std::size_t b) { return to_target_[a] < to_target_[b]; });
    }
  }

  std::optional<std::vector<std::size_t>> run(std::size_t source, std::size_t max_length) {
    if (to_target_[source] == kUnreachable) return std::nullopt;
    for (std::size_t limit = to_target_[source]; limit <= max_length; ++limit) {
      path_ = {source};
      if (visit(source, Bits(sets_[source].size()), limit)) return path_;
    }
    return std::nullopt;
  }

 private:
  bool visit(std::size_t x, const Bits& left, std::size_t remaining) {
    if (x == target_) return true;
    if (to_target_[x] > remaining) return false;
    auto key = std::make_pair(x, left);
    const auto it = failed_.find(key);
    if (it != failed_.end() && it->second >= remaining) return false;
    if (++expansions_ > budget_) throw BudgetExceeded{};
    for (auto y : order_[x]) {
      const Bits entered = sets_[y] - sets_[x];
      if (entered.intersects(left)) continue;
      path_.push_back(y);
      if (visit(y, left | (sets_[x] - sets_[y]), remaining - 1)) return true;
      path_.pop_back();
    }
    auto& slot = failed_[std::move(key)];
    slot = std::max(slot, remaining);
    return false;
  }

  const PolyGraph& g_;
  const std::vector<Bits>& sets_;
  std::size_t target_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::vector<std::size_t> to_target_;
  std::vector<std::vector<std::size_t>> order_;
  std::vector<std::size_t> path_;
  std::map<std::pair<std::size_t, Bits>, std::size_t> failed_;
};

std::vector<Bits> vertex_facet_sets(const Polytope& p) {
  std::vector<Bits> sets;
  for (std::size_t k = 0; k < p.v.vertices.size(); ++k) sets.push_back(p.facet_set(k));
  return sets;
}

std::size_t hirsch_cap(const Polytope& p) {
  return p.facets.size() >= p.dim() ? p.facets.size() - p.dim() : 0;
}

}  // namespace

NonrevisitingResult nonrevisiting_search(const PolyGraph& g, const std::vector<Bits>& sets,
                                         std::size_t source, std::size_t target,
                                         std::size_t max_length, std::size_t budget) {
  if (source >= g.size() || target >= g.size()) throw InvalidArgument("unknown node");
  NonrevisitingResult result;
  try {
    NonrevisitingDfs dfs(g, sets, target, budget);
    if (auto path = dfs.run(source, max_length)) {
      result.status = SearchStatus::found;
      result.path = PathReport{source, target, path->size() - 1, std::move(*path), PathKind::nonrevisiting};
    }
  } catch (const BudgetExceeded&) {
    result.status = SearchStatus::inconclusive;
  }
  return result;
}

NonrevisitingResult nonrevisiting_path(const Polytope& p, std::size_t u, std::size_t v,
                                       std::size_t budget) {
  if (!p.bounded()) throw InvalidArgument("non-revisiting paths require a bounded polytope");
  const std::size_t cap = hirsch_cap(p);
  auto result = nonrevisiting_search(p.graph, vertex_facet_sets(p), u, v, cap, budget);
  if (result.path && result.path->length > cap)
    throw std::logic_error("non-revisiting path longer than n - d");
  return result;
}

PropertyResult nonrevisiting_property(const PolyGraph& g, const std::vector<Bits>& sets,
                                      std::size_t max_length, std::size_t budget) {
  PropertyResult result;
  std::size_t states = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    // Breadth-first over states (vertex, left); every state reached is a
    // valid non-revisiting prefix.
    std::set<std::pair<std::size_t, Bits>> seen;
    std::vector<std::pair<std::size_t, Bits>> frontier{{u, Bits(sets[u].size())}};
    seen.insert(frontier.front());
    std::vector<bool> reached(g.size(), false);
    reached[u] = true;
    for (std::size_t depth = 0; depth < max_length && !frontier.empty(); ++depth) {
      std::vector<std::pair<std::size_t, Bits>> next;
      for (const auto& [x, left] : frontier) {
        for (auto y : g.neighbors(x)) {
          if ((sets[y] - sets[x]).intersects(left)) continue;
          auto state = std::make_pair(y, left | (sets[x] - sets[y]));
          if (!seen.insert(state).second) continue;
          if (++states > budget) {
            result.status = SearchStatus::inconclusive;
            return result;
          }
          reached[y] = true;
          next.push_back(std::move(state));
        }
      }
      frontier = std::move(next);
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!reached[v]) {
        result.status = SearchStatus::none;
        result.witness = std::make_pair(u, v);
        return result;
      }
    }
  }
  return result;
}

PropertyResult nonrevisiting_property(const Polytope& p, std::size_t budget) {
  if (!p.bounded()) throw InvalidArgument("non-revisiting property requires a bounded polytope");
  return nonrevisiting_property(p.graph, vertex_facet_sets(p), hirsch_cap(p), budget);
}

MonotoneResult monotone_eccentricity(const Polytope& p, const QVector& c) {
  if (!p.bounded()) throw InvalidArgument("monotone analysis requires a bounded polytope");
  if (c.size() != p.dim()) throw InvalidArgument("objective has wrong dimension");
  const std::size_t n = p.v.vertices.size();
  std::vector<Rational> value(n);
  for (std::size_t k = 0; k < n; ++k) value[k] = dot(c, p.v.vertices[k]);

  MonotoneResult out;
  for (std::size_t k = 1; k < n; ++k) {
    if (value[k] > value[out.optimum]) out.optimum = k;
    if (value[k] < value[out.minimum]) out.minimum = k;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (k != out.optimum && value[k] == value[out.optimum]) throw InvalidArgument("non-unique optimum");
  for (const auto& [a, b] : p.graph.edges())
    if (value[a] == value[b]) throw InvalidArgument("tie on edge");

  // Backward BFS from the optimum along edges that decrease c.
  std::vector<std::size_t> dist(n, kUnreachable);
  std::deque<std::size_t> queue{out.optimum};
  dist[out.optimum] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (auto y : p.graph.neighbors(x)) {
      if (value[y] >= value[x] || dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  out.lengths = dist;
  for (std::size_t k = 0; k < n; ++k) {
    if (dist[k] == kUnreachable) {
      out.unreachable.push_back(k);
    } else if (dist[k] > out.worst_length) {
      out.worst_length = dist[k];
      out.worst_source = k;
    }
  }
  bool unique_min = true;
  for (std::size_t k = 0; k < n; ++k)
    if (k != out.minimum && value[k] == value[out.minimum]) unique_min = false;
  if (unique_min && dist[out.minimum] != kUnreachable) out.from_minimum = dist[out.minimum];
  return out;
}

}  // namespace hirsch
