#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chargraph/catalog.hpp"
#include "chargraph/perm_group.hpp"
#include "chargraph/permutation.hpp"
#include "chargraph/simple_graph.hpp"
#include "oracles.hpp"

namespace testing {

using namespace chargraph;

inline PermGroup group(const std::string& generators, std::size_t cap = kDefaultGroupCap) {
  return PermGroup::from_generators(parse_generators(generators), cap);
}

inline const std::vector<std::pair<std::string, std::string>>& named_groups() {
  static const std::vector<std::pair<std::string, std::string>> groups = {
      {"S3", "(1 2),(1 2 3)"},
      {"D8", "(1 2 3 4),(1 3)"},
      {"Q8", "(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)"},
      {"A4", "(1 2)(3 4),(1 2 3)"},
      {"S4", "(1 2),(1 2 3 4)"},
      {"SL(2,3)", "(1 4 7)(2 8 5),(1 6 2 3)(4 7 8 5)"},
      {"A5", "(1 2 3 4 5),(3 4 5)"},
      {"C7:C3", "(1 2 3 4 5 6 7),(2 3 5)(4 7 6)"},
      {"3^(1+2)", "(1 4 7)(2 5 8)(3 6 9),(4 5 6)(7 9 8)"},
      {"F20", "(1 2 3 4 5),(2 3 5 4)"},
      {"C4", "(1 2 3 4)"},
      {"C2xC2", "(1 2),(3 4)"},
  };
  return groups;
}

inline std::vector<oracle::Perm> oracle_generators(const std::string& generators) {
  std::vector<oracle::Perm> out;
  for (const auto& p : parse_generators(generators)) out.push_back(p.images());
  return out;
}

inline SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
  SimpleGraph g(static_cast<std::size_t>(n));
  int bitpos = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bitpos) {
      if ((mask >> bitpos) & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

inline oracle::Matrix to_matrix(const SimpleGraph& g) {
  oracle::Matrix a(g.n(), std::vector<int>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline std::uint64_t mask_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// K_s plus a pendant w, with the cut vertex v adjacent to w and `hits`
// clique vertices. Vertex order: w, v, clique.
inline SimpleGraph pendant_clique(int s, int hits) {
  SimpleGraph g(static_cast<std::size_t>(s + 2));
  g.add_edge(0, 1);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) g.add_edge(static_cast<Vertex>(2 + i), static_cast<Vertex>(2 + j));
    if (i < hits) g.add_edge(1, static_cast<Vertex>(2 + i));
  }
  return g;
}

// K_m, then v, then K_s; v is complete to K_s and hits `hits` vertices of K_m.
inline SimpleGraph two_cliques_through(int m, int s, int hits) {
  SimpleGraph g(static_cast<std::size_t>(m + 1 + s));
  const auto v = static_cast<Vertex>(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    if (i < hits) g.add_edge(v, static_cast<Vertex>(i));
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) g.add_edge(static_cast<Vertex>(m + 1 + i), static_cast<Vertex>(m + 1 + j));
    g.add_edge(v, static_cast<Vertex>(m + 1 + i));
  }
  return g;
}

}  // namespace testing
