#include "chargraph/simple_graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "chargraph/errors.hpp"

namespace chargraph {

std::vector<Vertex> to_vector(VertexSet s) {
  std::vector<Vertex> out;
  for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet to_set(const std::vector<Vertex>& vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= bit(v);
  return s;
}

SimpleGraph::SimpleGraph(std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::GraphTooLarge,
                std::to_string(n) + " vertices exceed the limit of " + std::to_string(kMaxVertices));
  }
  rows_.assign(n, 0);
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.rows_[v] = g.all() & ~bit(v);
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  SimpleGraph g = path(n);
  if (n >= 3) g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

SimpleGraph SimpleGraph::star(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph SimpleGraph::cocktail_party(std::size_t n) {
  SimpleGraph g = complete(n);
  for (Vertex v = 0; v + 1 < n; v += 2) g.remove_edge(v, v + 1);
  return g;
}

SimpleGraph SimpleGraph::disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const auto shift = static_cast<Vertex>(a.n());
  for (auto [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n() || v >= n() || u == v) {
    throw Error(ErrorKind::ParseError, "edge endpoints must be distinct existing vertices");
  }
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet r : rows_) twice += static_cast<std::size_t>(set_size(r));
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n(); ++u) {
    for_each_vertex(rows_[u] & ~((bit(u) << 1) - 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

void SimpleGraph::set_labels(std::vector<std::uint64_t> labels) {
  if (!labels.empty() && labels.size() != n()) {
    throw Error(ErrorKind::ParseError, "label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::optional<Vertex> SimpleGraph::find_label(std::uint64_t label) const {
  for (Vertex v = 0; v < n(); ++v) {
    if (this->label(v) == label) return v;
  }
  return std::nullopt;
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const {
  std::vector<Vertex> old = to_vector(keep & all());
  SimpleGraph g(old.size());
  for (Vertex i = 0; i < old.size(); ++i) {
    for (Vertex j = i + 1; j < old.size(); ++j) {
      if (has_edge(old[i], old[j])) g.add_edge(i, j);
    }
  }
  if (!labels_.empty()) {
    std::vector<std::uint64_t> labels;
    for (Vertex v : old) labels.push_back(labels_[v]);
    g.labels_ = std::move(labels);
  }
  return g;
}

namespace {

std::uint64_t parse_label(std::string_view token) {
  auto a = token.find_first_not_of(" \t\r\n");
  auto b = token.find_last_not_of(" \t\r\n");
  if (a == std::string_view::npos) throw Error(ErrorKind::ParseError, "empty vertex label");
  token = token.substr(a, b - a + 1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, "bad vertex label '" + std::string(token) + "'");
  }
  return v;
}

SimpleGraph build_labeled(const std::set<std::uint64_t>& vertices,
                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  std::vector<std::uint64_t> labels(vertices.begin(), vertices.end());
  SimpleGraph g(labels.size());
  auto index = [&](std::uint64_t label) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::ParseError, "self-loop on " + std::to_string(a));
    g.add_edge(index(a), index(b));
  }
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace

SimpleGraph parse_graph_string(const std::string& text) {
  std::set<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) semi = text.size();
    std::string_view token(text.data() + pos, semi - pos);
    if (token.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      auto dash = token.find('-');
      if (dash == std::string_view::npos) {
        vertices.insert(parse_label(token));
      } else {
        auto a = parse_label(token.substr(0, dash));
        auto b = parse_label(token.substr(dash + 1));
        vertices.insert(a);
        vertices.insert(b);
        edges.emplace_back(a, b);
      }
    }
    pos = semi + 1;
  }
  return build_labeled(vertices, edges);
}

SimpleGraph parse_graph_json(const std::string& text) {
  std::set<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  try {
    auto doc = nlohmann::json::parse(text);
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "graph JSON must be an object");
    if (doc.contains("vertices")) {
      for (const auto& v : doc.at("vertices")) vertices.insert(v.get<std::uint64_t>());
    }
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edges are [a, b] pairs");
        auto a = e[0].get<std::uint64_t>();
        auto b = e[1].get<std::uint64_t>();
        vertices.insert(a);
        vertices.insert(b);
        edges.emplace_back(a, b);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return build_labeled(vertices, edges);
}

std::string to_graph_string(const SimpleGraph& g) {
  std::string out;
  auto append = [&](const std::string& tok) {
    if (!out.empty()) out += ';';
    out += tok;
  };
  for (auto [u, v] : g.edges()) append(std::to_string(g.label(u)) + "-" + std::to_string(g.label(v)));
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.neighbors(v) == 0) append(std::to_string(g.label(v)));
  }
  return out;
}

}  // namespace chargraph
