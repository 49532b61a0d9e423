#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chargraph {

using VertexSet = std::uint32_t;
using Vertex = unsigned;
using Edge = std::pair<Vertex, Vertex>;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return static_cast<Vertex>(std::countr_zero(s)); }
inline VertexSet bit(Vertex v) { return VertexSet{1} << v; }

// Calls f(v) for each member of s in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

std::vector<Vertex> to_vector(VertexSet s);
VertexSet to_set(const std::vector<Vertex>& vs);

// Undirected simple graph on at most 24 vertices with one adjacency bitset
// per vertex. Labels are optional (primes when built from a character graph).
class SimpleGraph {
 public:
  static constexpr std::size_t kMaxVertices = 24;

  // Throws GraphTooLarge above kMaxVertices.
  explicit SimpleGraph(std::size_t n = 0);

  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge>& edges);
  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  static SimpleGraph star(std::size_t leaves);
  // K_n minus a perfect matching {0,1}, {2,3}, ...; n even.
  static SimpleGraph cocktail_party(std::size_t n);
  // Vertices of b are renumbered after those of a.
  static SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

  std::size_t n() const { return rows_.size(); }
  VertexSet all() const { return rows_.empty() ? 0 : static_cast<VertexSet>((std::uint64_t{1} << n()) - 1); }
  VertexSet neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return set_size(rows_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  const std::vector<std::uint64_t>& labels() const { return labels_; }
  void set_labels(std::vector<std::uint64_t> labels);
  // The label if present, otherwise the vertex index.
  std::uint64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
  std::optional<Vertex> find_label(std::uint64_t label) const;

  // Subgraph induced on `keep`, renumbered in increasing vertex order.
  SimpleGraph induced(VertexSet keep) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::uint64_t> labels_;
};

// Edge-list string "3-5;2;17": "a-b" adds an edge, a bare label declares a
// vertex. Vertices are sorted by label.
SimpleGraph parse_graph_string(const std::string& text);
// {"vertices": [...], "edges": [[a, b], ...]}
SimpleGraph parse_graph_json(const std::string& text);
std::string to_graph_string(const SimpleGraph& g);

}  // namespace chargraph
