#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "chargraph/degrees.hpp"
#include "chargraph/simple_graph.hpp"

namespace chargraph {

enum class GraphSource { Group, DegreeList, RawGraph };

std::string to_string(GraphSource source);

// Delta(G): vertices are the primes of rho, p ~ q iff some degree is
// divisible by pq. Each edge remembers the smallest such degree.
class CharacterGraph {
 public:
  CharacterGraph() = default;

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t vertex_count() const { return primes_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  // Smallest witness degree for the edge {i, j}, if it is an edge.
  std::optional<std::uint64_t> witness(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& witnesses() const { return witnesses_; }
  GraphSource source() const { return source_; }

  // Labeled by primes, vertices in increasing prime order.
  SimpleGraph to_simple_graph() const;

  // Witnesses are 0 for raw graphs, which carry none.
  static CharacterGraph from_simple_graph(const SimpleGraph& g);

  friend CharacterGraph build_graph(const DegreeMultiset& d);

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<std::vector<bool>> adjacency_;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> witnesses_;
  GraphSource source_ = GraphSource::DegreeList;
};

std::vector<std::uint64_t> rho(const DegreeMultiset& d);

CharacterGraph build_graph(const DegreeMultiset& d);

// Edge labels carry the witness degree; `highlight` vertices (cut vertices
// in reports) get a distinct fill.
std::string to_dot(const CharacterGraph& g, const std::vector<std::uint64_t>& highlight = {});
nlohmann::ordered_json to_json(const CharacterGraph& g);

}  // namespace chargraph
