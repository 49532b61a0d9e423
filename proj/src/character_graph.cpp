#include "chargraph/character_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chargraph/number_theory.hpp"

namespace chargraph {

std::string to_string(GraphSource source) {
  switch (source) {
    case GraphSource::Group: return "group";
    case GraphSource::DegreeList: return "degree-list";
    case GraphSource::RawGraph: return "raw-graph";
  }
  return "unknown";
}

std::optional<std::uint64_t> CharacterGraph::witness(std::size_t i, std::size_t j) const {
  if (!adjacency_[i][j]) return std::nullopt;
  auto it = witnesses_.find({std::min(i, j), std::max(i, j)});
  if (it == witnesses_.end()) return std::nullopt;
  return it->second;
}

SimpleGraph CharacterGraph::to_simple_graph() const {
  SimpleGraph g(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    for (std::size_t j = i + 1; j < primes_.size(); ++j) {
      if (adjacency_[i][j]) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  g.set_labels(primes_);
  return g;
}

CharacterGraph CharacterGraph::from_simple_graph(const SimpleGraph& g) {
  CharacterGraph out;
  out.source_ = GraphSource::RawGraph;
  const std::size_t n = g.n();
  for (Vertex v = 0; v < n; ++v) out.primes_.push_back(g.label(v));
  out.adjacency_.assign(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) {
    out.adjacency_[u][v] = out.adjacency_[v][u] = true;
    out.witnesses_[{std::min(u, v), std::max(u, v)}] = 0;
  }
  return out;
}

std::vector<std::uint64_t> rho(const DegreeMultiset& d) {
  std::set<std::uint64_t> primes;
  for (std::uint64_t degree : d.distinct_degrees()) {
    for (std::uint64_t p : prime_divisors(degree)) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

CharacterGraph build_graph(const DegreeMultiset& d) {
  CharacterGraph g;
  g.source_ = d.source() == DegreeSource::Group ? GraphSource::Group : GraphSource::DegreeList;
  g.primes_ = rho(d);
  const std::size_t n = g.primes_.size();
  g.adjacency_.assign(n, std::vector<bool>(n, false));
  // distinct_degrees is increasing, so the first hit is the smallest witness
  for (std::uint64_t degree : d.distinct_degrees()) {
    std::vector<std::size_t> idx;
    for (std::uint64_t p : prime_divisors(degree)) {
      idx.push_back(static_cast<std::size_t>(
          std::lower_bound(g.primes_.begin(), g.primes_.end(), p) - g.primes_.begin()));
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        std::size_t i = std::min(idx[a], idx[b]);
        std::size_t j = std::max(idx[a], idx[b]);
        if (g.adjacency_[i][j]) continue;
        g.adjacency_[i][j] = g.adjacency_[j][i] = true;
        g.witnesses_[{i, j}] = degree;
      }
    }
  }
  return g;
}

std::string to_dot(const CharacterGraph& g, const std::vector<std::uint64_t>& highlight) {
  std::ostringstream os;
  os << "graph Delta {\n";
  os << "  node [shape=circle];\n";
  for (std::uint64_t p : g.primes()) {
    os << "  p" << p << " [label=\"" << p << "\"";
    if (std::find(highlight.begin(), highlight.end(), p) != highlight.end()) {
      os << ", style=filled, fillcolor=\"#f4a582\", cut_vertex=true";
    }
    os << "];\n";
  }
  for (const auto& [edge, degree] : g.witnesses()) {
    os << "  p" << g.primes()[edge.first] << " -- p" << g.primes()[edge.second];
    if (degree != 0) os << " [label=\"" << degree << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const CharacterGraph& g) {
  nlohmann::ordered_json out;
  out["primes"] = g.primes();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [edge, degree] : g.witnesses()) {
    nlohmann::ordered_json e;
    e["edge"] = {g.primes()[edge.first], g.primes()[edge.second]};
    if (degree != 0) e["witness"] = degree;
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  out["source"] = to_string(g.source());
  return out;
}

}  // namespace chargraph
