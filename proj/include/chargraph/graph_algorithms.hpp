#pragma once

#include <optional>
#include <vector>

#include "chargraph/simple_graph.hpp"

namespace chargraph {

SimpleGraph complement(const SimpleGraph& g);
std::size_t edge_count(const SimpleGraph& g);

std::vector<VertexSet> components(const SimpleGraph& g);
std::vector<VertexSet> components_within(const SimpleGraph& g, VertexSet within);
bool is_connected(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
bool is_clique(const SimpleGraph& g, VertexSet s);
bool is_independent(const SimpleGraph& g, VertexSet s);

// BFS distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> distances(const SimpleGraph& g);
std::vector<int> distances_from(const SimpleGraph& g, Vertex source);
// nullopt means infinite (disconnected). The empty and one-vertex graphs
// have diameter 0.
std::optional<int> diameter(const SimpleGraph& g);

// Low-point DFS.
VertexSet articulation_points(const SimpleGraph& g);

enum class Pattern { Triangle, K4, Claw, P4 };

// Lexicographically first vertex set (as a sorted list) inducing the pattern.
std::optional<std::vector<Vertex>> contains_induced(const SimpleGraph& g, Pattern pattern);

struct SizedSet {
  int size = 0;
  VertexSet members = 0;
};

SizedSet maximum_independent_set(const SimpleGraph& g);
int independence_number(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);
// Minimum number of vertices whose deletion disconnects g; n-1 for K_n and
// 0 for disconnected graphs.
int vertex_connectivity(const SimpleGraph& g);
SizedSet minimum_dominating_set(const SimpleGraph& g);
int domination_number(const SimpleGraph& g);

std::vector<Edge> maximum_matching(const SimpleGraph& g);
std::optional<std::vector<Edge>> perfect_matching(const SimpleGraph& g);
bool has_perfect_matching(const SimpleGraph& g);
bool is_hypomatchable(const SimpleGraph& g);

std::optional<std::vector<Vertex>> hamiltonian_path(const SimpleGraph& g);
// The returned cycle lists each vertex once; the closing edge is implied.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const SimpleGraph& g);

std::optional<int> regularity(const SimpleGraph& g);

struct SrgParameters {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

// Complete and edgeless graphs are never strongly regular.
std::optional<SrgParameters> strongly_regular_parameters(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

struct GraphFacts {
  std::vector<VertexSet> components;
  std::optional<int> diameter;
  VertexSet cut_vertices = 0;
  int alpha = 0;
  int kappa = 0;
  int gamma = 0;
  std::optional<int> regular_degree;
};

GraphFacts graph_facts(const SimpleGraph& g);

}  // namespace chargraph
