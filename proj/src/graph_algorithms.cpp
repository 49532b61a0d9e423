#include "chargraph/graph_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace chargraph {

namespace {

// Vertices of `within` reachable from `start` without leaving `within`.
VertexSet reach(const SimpleGraph& g, Vertex start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_within(const SimpleGraph& g, VertexSet within) {
  if (within == 0) return true;
  return reach(g, lowest(within), within) == within;
}

// Visits every k-subset of `universe` (n bits) in increasing numeric order
// until f returns true.
template <typename F>
bool any_subset_of_size(std::size_t n, int k, F&& f) {
  if (k == 0) return f(VertexSet{0});
  if (k > static_cast<int>(n)) return false;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    if (f(static_cast<VertexSet>(s))) return true;
    std::uint64_t c = s & (~s + 1);
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

void mis_search(const SimpleGraph& g, VertexSet cand, VertexSet chosen, SizedSet& best) {
  if (cand == 0) {
    if (set_size(chosen) > best.size) best = {set_size(chosen), chosen};
    return;
  }
  if (set_size(chosen) + set_size(cand) <= best.size) return;
  // A vertex with at most one candidate neighbour can always be taken.
  Vertex pick = lowest(cand);
  int pick_deg = set_size(g.neighbors(pick) & cand);
  bool forced = false;
  for_each_vertex(cand, [&](Vertex v) {
    if (forced) return;
    int d = set_size(g.neighbors(v) & cand);
    if (d <= 1) {
      pick = v;
      forced = true;
    } else if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  });
  if (forced) {
    mis_search(g, cand & ~bit(pick) & ~g.neighbors(pick), chosen | bit(pick), best);
    return;
  }
  mis_search(g, cand & ~bit(pick) & ~g.neighbors(pick), chosen | bit(pick), best);
  mis_search(g, cand & ~bit(pick), chosen, best);
}

struct ExactMatcher {
  const SimpleGraph& g;
  std::unordered_map<VertexSet, int> memo;

  int best(VertexSet rem) {
    if (set_size(rem) < 2) return 0;
    if (auto it = memo.find(rem); it != memo.end()) return it->second;
    const Vertex v = lowest(rem);
    const VertexSet rest = rem & ~bit(v);
    const int cap = set_size(rem) / 2;
    int result = 0;
    VertexSet nb = g.neighbors(v) & rest;
    while (nb != 0 && result < cap) {
      Vertex u = lowest(nb);
      nb &= nb - 1;
      result = std::max(result, 1 + best(rest & ~bit(u)));
    }
    if (result < cap && set_size(rest) / 2 > result) result = std::max(result, best(rest));
    memo.emplace(rem, result);
    return result;
  }

  std::vector<Edge> reconstruct(VertexSet rem) {
    std::vector<Edge> out;
    while (set_size(rem) >= 2) {
      const int target = best(rem);
      if (target == 0) break;
      const Vertex v = lowest(rem);
      const VertexSet rest = rem & ~bit(v);
      bool matched = false;
      for_each_vertex(g.neighbors(v) & rest, [&](Vertex u) {
        if (matched) return;
        if (1 + best(rest & ~bit(u)) == target) {
          out.emplace_back(v, u);
          rem = rest & ~bit(u);
          matched = true;
        }
      });
      if (!matched) rem = rest;
    }
    return out;
  }
};

// Greedy matching improved by alternating-path search that does not shrink
// blossoms; every path it finds is a genuine augmenting path.
std::vector<int> heuristic_matching(const SimpleGraph& g) {
  const auto n = static_cast<Vertex>(g.n());
  std::vector<int> mate(n, -1);
  for (Vertex u = 0; u < n; ++u) {
    if (mate[u] != -1) continue;
    for_each_vertex(g.neighbors(u), [&](Vertex v) {
      if (mate[u] == -1 && mate[v] == -1) {
        mate[u] = static_cast<int>(v);
        mate[v] = static_cast<int>(u);
      }
    });
  }
  std::function<bool(Vertex, VertexSet&)> augment = [&](Vertex u, VertexSet& used) -> bool {
    used |= bit(u);
    VertexSet nb = g.neighbors(u) & ~used;
    while (nb != 0) {
      Vertex w = lowest(nb);
      nb &= nb - 1;
      if (mate[w] == -1) {
        mate[w] = static_cast<int>(u);
        mate[u] = static_cast<int>(w);
        return true;
      }
      const auto x = static_cast<Vertex>(mate[w]);
      if (used & bit(x)) continue;
      used |= bit(w);
      if (augment(x, used)) {
        mate[w] = static_cast<int>(u);
        mate[u] = static_cast<int>(w);
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (mate[u] != -1) continue;
    VertexSet used = 0;
    augment(u, used);
  }
  return mate;
}

struct HamiltonSearch {
  const SimpleGraph& g;
  bool closing;  // search for a cycle through vertex 0
  std::vector<Vertex> path;

  bool feasible(Vertex cur, VertexSet unvisited) const {
    VertexSet region = unvisited | bit(cur);
    if (closing) region |= bit(0);
    if (!connected_within(g, region)) return false;
    int dead_ends = 0;
    bool ok = true;
    for_each_vertex(unvisited, [&](Vertex w) {
      int d = set_size(g.neighbors(w) & region);
      if (closing) {
        if (d < 2) ok = false;
      } else if (d <= 1) {
        ++dead_ends;
      }
    });
    return ok && dead_ends <= 1;
  }

  bool extend(Vertex cur, VertexSet unvisited) {
    if (unvisited == 0) return !closing || g.has_edge(cur, 0);
    if (!feasible(cur, unvisited)) return false;
    std::vector<Vertex> next = to_vector(g.neighbors(cur) & unvisited);
    std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return set_size(g.neighbors(a) & unvisited) < set_size(g.neighbors(b) & unvisited);
    });
    for (Vertex v : next) {
      path.push_back(v);
      if (extend(v, unvisited & ~bit(v))) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) c.add_edge(u, v);
    }
  }
  c.set_labels(g.labels());
  return c;
}

std::size_t edge_count(const SimpleGraph& g) { return g.edge_count(); }

std::vector<VertexSet> components_within(const SimpleGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left != 0) {
    VertexSet c = reach(g, lowest(left), within);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<VertexSet> components(const SimpleGraph& g) { return components_within(g, g.all()); }

bool is_connected(const SimpleGraph& g) { return connected_within(g, g.all()); }

bool is_clique(const SimpleGraph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) {
    if ((g.neighbors(v) & s) != (s & ~bit(v))) ok = false;
  });
  return ok;
}

bool is_complete(const SimpleGraph& g) { return is_clique(g, g.all()); }

bool is_independent(const SimpleGraph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) {
    if (g.neighbors(v) & s) ok = false;
  });
  return ok;
}

std::vector<int> distances_from(const SimpleGraph& g, Vertex source) {
  std::vector<int> dist(g.n(), -1);
  dist[source] = 0;
  VertexSet seen = bit(source);
  VertexSet frontier = seen;
  for (int d = 1; frontier != 0; ++d) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= ~seen;
    for_each_vertex(next, [&](Vertex v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::vector<std::vector<int>> distances(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for (Vertex v = 0; v < g.n(); ++v) out.push_back(distances_from(g, v));
  return out;
}

std::optional<int> diameter(const SimpleGraph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int d : distances_from(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

VertexSet articulation_points(const SimpleGraph& g) {
  const std::size_t n = g.n();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  VertexSet cut = 0;
  int timer = 0;
  std::function<void(Vertex, int)> dfs = [&](Vertex u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for_each_vertex(g.neighbors(u), [&](Vertex v) {
      if (disc[v] == -1) {
        ++children;
        dfs(v, static_cast<int>(u));
        low[u] = std::min(low[u], low[v]);
        if (parent != -1 && low[v] >= disc[u]) cut |= bit(u);
      } else if (static_cast<int>(v) != parent) {
        low[u] = std::min(low[u], disc[v]);
      }
    });
    if (parent == -1 && children > 1) cut |= bit(u);
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, -1);
  }
  return cut;
}

std::optional<std::vector<Vertex>> contains_induced(const SimpleGraph& g, Pattern pattern) {
  const auto n = static_cast<Vertex>(g.n());
  auto induced_edges = [&](VertexSet s) {
    int twice = 0;
    for_each_vertex(s, [&](Vertex v) { twice += set_size(g.neighbors(v) & s); });
    return twice / 2;
  };
  auto matches = [&](VertexSet s) {
    const int m = induced_edges(s);
    switch (pattern) {
      case Pattern::Triangle: return m == 3;
      case Pattern::K4: return m == 6;
      case Pattern::Claw:
      case Pattern::P4: {
        if (m != 3) return false;
        int maxdeg = 0;
        int leaves = 0;
        for_each_vertex(s, [&](Vertex v) {
          int d = set_size(g.neighbors(v) & s);
          maxdeg = std::max(maxdeg, d);
          if (d == 1) ++leaves;
        });
        return pattern == Pattern::Claw ? maxdeg == 3 : (maxdeg == 2 && leaves == 2);
      }
    }
    return false;
  };
  const bool four = pattern != Pattern::Triangle;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        VertexSet s3 = bit(a) | bit(b) | bit(c);
        if (!four) {
          if (matches(s3)) return std::vector<Vertex>{a, b, c};
          continue;
        }
        for (Vertex d = c + 1; d < n; ++d) {
          if (matches(s3 | bit(d))) return std::vector<Vertex>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

SizedSet maximum_independent_set(const SimpleGraph& g) {
  SizedSet best;
  mis_search(g, g.all(), 0, best);
  return best;
}

int independence_number(const SimpleGraph& g) { return maximum_independent_set(g).size; }

int clique_number(const SimpleGraph& g) { return independence_number(complement(g)); }

int vertex_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.n();
  if (n <= 1 || !is_connected(g)) return 0;
  if (is_complete(g)) return static_cast<int>(n) - 1;
  int min_degree = static_cast<int>(n);
  for (Vertex v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
  // Removing the neighbourhood of a minimum-degree vertex always separates
  // it from some non-neighbour, so kappa <= min degree.
  for (int k = 1; k < min_degree; ++k) {
    bool found = any_subset_of_size(n, k, [&](VertexSet s) {
      return !connected_within(g, g.all() & ~s);
    });
    if (found) return k;
  }
  return min_degree;
}

SizedSet minimum_dominating_set(const SimpleGraph& g) {
  const std::size_t n = g.n();
  SizedSet out;
  for (int k = 0; k <= static_cast<int>(n); ++k) {
    bool found = any_subset_of_size(n, k, [&](VertexSet s) {
      VertexSet covered = s;
      for_each_vertex(s, [&](Vertex v) { covered |= g.neighbors(v); });
      if (covered == g.all()) {
        out = {k, s};
        return true;
      }
      return false;
    });
    if (found) return out;
  }
  return out;
}

int domination_number(const SimpleGraph& g) { return minimum_dominating_set(g).size; }

std::vector<Edge> maximum_matching(const SimpleGraph& g) {
  auto mate = heuristic_matching(g);
  std::vector<Edge> found;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (mate[u] > static_cast<int>(u)) found.emplace_back(u, static_cast<Vertex>(mate[u]));
  }
  if (found.size() == g.n() / 2) return found;
  ExactMatcher exact{g, {}};
  if (exact.best(g.all()) == static_cast<int>(found.size())) return found;
  return exact.reconstruct(g.all());
}

std::optional<std::vector<Edge>> perfect_matching(const SimpleGraph& g) {
  if (g.n() % 2 != 0) return std::nullopt;
  auto m = maximum_matching(g);
  if (m.size() * 2 != g.n()) return std::nullopt;
  return m;
}

bool has_perfect_matching(const SimpleGraph& g) { return perfect_matching(g).has_value(); }

bool is_hypomatchable(const SimpleGraph& g) {
  if (g.n() % 2 == 0) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!has_perfect_matching(g.induced(g.all() & ~bit(v)))) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const SimpleGraph& g) {
  const std::size_t n = g.n();
  if (n == 0) return std::vector<Vertex>{};
  if (!is_connected(g)) return std::nullopt;
  std::vector<Vertex> starts(n);
  for (Vertex v = 0; v < n; ++v) starts[v] = v;
  int leaves = 0;
  for (Vertex v = 0; v < n; ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  if (leaves > 2) return std::nullopt;
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (Vertex s : starts) {
    if (leaves > 0 && g.degree(s) != 1) break;
    HamiltonSearch search{g, false, {s}};
    if (search.extend(s, g.all() & ~bit(s))) return search.path;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> hamiltonian_cycle(const SimpleGraph& g) {
  const std::size_t n = g.n();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  HamiltonSearch search{g, true, {0}};
  if (search.extend(0, g.all() & ~bit(0))) return search.path;
  return std::nullopt;
}

std::optional<int> regularity(const SimpleGraph& g) {
  if (g.n() == 0) return 0;
  const int k = g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::optional<SrgParameters> strongly_regular_parameters(const SimpleGraph& g) {
  auto k = regularity(g);
  if (!k || g.n() == 0 || g.edge_count() == 0 || is_complete(g)) return std::nullopt;
  std::optional<int> lambda;
  std::optional<int> mu;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const int common = set_size(g.neighbors(u) & g.neighbors(v));
      auto& slot = g.has_edge(u, v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return SrgParameters{static_cast<int>(g.n()), *k, lambda.value_or(0), mu.value_or(0)};
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const std::size_t n = a.n();
  if (n != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da;
  std::vector<int> db;
  for (Vertex v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da;
  auto sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return da[x] > da[y]; });
  std::vector<int> image(n, -1);
  VertexSet used = 0;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    const Vertex x = order[i];
    for (Vertex y = 0; y < n; ++y) {
      if ((used & bit(y)) || db[y] != da[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex w = order[j];
        if (a.has_edge(x, w) != b.has_edge(y, static_cast<Vertex>(image[w]))) ok = false;
      }
      if (!ok) continue;
      image[x] = static_cast<int>(y);
      used |= bit(y);
      if (place(i + 1)) return true;
      used &= ~bit(y);
      image[x] = -1;
    }
    return false;
  };
  return place(0);
}

GraphFacts graph_facts(const SimpleGraph& g) {
  GraphFacts f;
  f.components = components(g);
  f.diameter = diameter(g);
  f.cut_vertices = articulation_points(g);
  f.alpha = independence_number(g);
  f.kappa = vertex_connectivity(g);
  f.gamma = domination_number(g);
  f.regular_degree = regularity(g);
  return f;
}

}  // namespace chargraph
