#include "chargraph/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chargraph/character_graph.hpp"
#include "chargraph/errors.hpp"
#include "chargraph/graph_algorithms.hpp"
#include "chargraph/number_theory.hpp"
#include "chargraph/spectrum.hpp"

namespace chargraph {

namespace {

Verdict make(std::string name, std::string anchor, Assumption assumes) {
  Verdict v;
  v.name = std::move(name);
  v.anchor = std::move(anchor);
  v.assumes = assumes;
  return v;
}

Verdict& inapplicable(Verdict& v, const std::string& reason) {
  v.status = Status::Inapplicable;
  v.witness["reason"] = reason;
  return v;
}

std::string rational(long long num, long long den) {
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  std::ostringstream os;
  os << num;
  if (den != 1) os << '/' << den;
  return os.str();
}

const char* kNeedsSolvable = "requires a solvable group";

Json edges_json(const SimpleGraph& g, const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [a, b] : edges) out.push_back({g.label(a), g.label(b)});
  return out;
}

Json partition_json(const SimpleGraph& g, const BisslerPartition& p) {
  Json out;
  out["p1"] = g.label(p.p1);
  out["p4"] = g.label(p.p4);
  out["rho1"] = labels_json(g, p.rho1);
  out["rho2"] = labels_json(g, p.rho2);
  out["rho3"] = labels_json(g, p.rho3);
  out["rho4"] = labels_json(g, p.rho4);
  out["relabeled"] = p.relabeled;
  return out;
}

BisslerPartition layers(const SimpleGraph& g, Vertex p1, Vertex p4) {
  const auto dist = distances_from(g, p1);
  BisslerPartition p;
  p.p1 = p1;
  p.p4 = p4;
  VertexSet near = 0;
  for (Vertex q = 0; q < g.n(); ++q) {
    if (dist[q] == 3) p.rho4 |= bit(q);
    if (dist[q] == 2) p.rho3 |= bit(q);
    if (dist[q] == 1) near |= bit(q);
  }
  p.rho1 = bit(p1);
  for_each_vertex(near, [&](Vertex q) {
    if (g.neighbors(q) & p.rho3) {
      p.rho2 |= bit(q);
    } else {
      p.rho1 |= bit(q);
    }
  });
  return p;
}

bool balanced(const BisslerPartition& p) {
  return set_size(p.rho1 | p.rho2) <= set_size(p.rho3 | p.rho4);
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string to_string(Assumption assumption) {
  switch (assumption) {
    case Assumption::Any: return "any";
    case Assumption::Solvable: return "solvable";
    case Assumption::Nonsolvable: return "nonsolvable";
  }
  return "unknown";
}

std::string to_string(CutVertexKind kind) {
  switch (kind) {
    case CutVertexKind::NoCutVertex: return "no-cut-vertex";
    case CutVertexKind::PathLengthTwo: return "path-length-two";
    case CutVertexKind::Structure1: return "structure-1";
    case CutVertexKind::Structure2: return "structure-2";
    case CutVertexKind::Diam2CutVertex: return "diameter-2-cut-vertex";
    case CutVertexKind::Violation: return "violation";
  }
  return "unknown";
}

Json Verdict::to_json() const {
  Json out;
  out["name"] = name;
  out["status"] = to_string(status);
  out["assumes"] = to_string(assumes);
  out["witness"] = witness;
  out["anchor"] = anchor;
  return out;
}

Json labels_json(const SimpleGraph& g, VertexSet s) {
  Json out = Json::array();
  for_each_vertex(s, [&](Vertex v) { out.push_back(g.label(v)); });
  return out;
}

Json labels_json(const SimpleGraph& g, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

Verdict check_palfy(const SimpleGraph& g) {
  Verdict v = make("palfy", "Palfy three-prime condition", Assumption::Solvable);
  if (auto t = contains_induced(complement(g), Pattern::Triangle)) {
    v.status = Status::Fail;
    v.witness["pairwise_nonadjacent"] = labels_json(g, *t);
  } else {
    v.status = Status::Pass;
    v.witness["n"] = g.n();
  }
  return v;
}

Verdict check_moreto_tiep(const SimpleGraph& g) {
  Verdict v = make("moreto_tiep", "Moreto-Tiep four-prime condition", Assumption::Any);
  if (auto t = contains_induced(complement(g), Pattern::K4)) {
    v.status = Status::Fail;
    v.witness["pairwise_nonadjacent"] = labels_json(g, *t);
  } else {
    v.status = Status::Pass;
    v.witness["n"] = g.n();
  }
  return v;
}

Verdict check_edge_bound(const SimpleGraph& g, bool solvable) {
  Verdict v = make(solvable ? "edge_bound/solvable" : "edge_bound/nonsolvable", "Turan edge lower bound",
                   solvable ? Assumption::Solvable : Assumption::Nonsolvable);
  const auto n = static_cast<long long>(g.n());
  const auto m = static_cast<long long>(edge_count(g));
  // m >= (n/2)(n/2 - 1) = n(n-2)/4, or (n/2)(n/3 - 1) = n(n-3)/6
  const long long den = solvable ? 4 : 6;
  const long long num = solvable ? n * (n - 2) : n * (n - 3);
  v.status = den * m >= num ? Status::Pass : Status::Fail;
  v.witness["n"] = n;
  v.witness["m"] = m;
  v.witness["bound"] = rational(num, den);
  return v;
}

Verdict check_domination(const SimpleGraph& g, bool solvable) {
  Verdict v = make(solvable ? "domination/solvable" : "domination/nonsolvable", "domination number bound",
                   solvable ? Assumption::Solvable : Assumption::Nonsolvable);
  const SizedSet d = minimum_dominating_set(g);
  const int bound = solvable ? 2 : 3;
  v.status = d.size <= bound ? Status::Pass : Status::Fail;
  v.witness["gamma"] = d.size;
  v.witness["bound"] = bound;
  v.witness["dominating_set"] = labels_json(g, d.members);
  return v;
}

Verdict check_chvatal_erdos(const SimpleGraph& g) {
  Verdict v = make("chvatal_erdos", "Chvatal-Erdos Hamiltonian path", Assumption::Solvable);
  if (!is_connected(g)) return inapplicable(v, "graph is disconnected");
  const int alpha = independence_number(g);
  const int kappa = vertex_connectivity(g);
  auto path = hamiltonian_path(g);
  if (alpha <= kappa + 1 && !path) {
    std::ostringstream os;
    os << "alpha=" << alpha << " <= kappa+1=" << kappa + 1 << " but no Hamiltonian path was found";
    throw Error(ErrorKind::SolverInconsistency, os.str());
  }
  v.witness["alpha"] = alpha;
  v.witness["kappa"] = kappa;
  if (path) {
    v.status = Status::Pass;
    v.witness["path"] = labels_json(g, *path);
  } else {
    v.status = Status::Fail;
    v.witness["path"] = nullptr;
  }
  return v;
}

Verdict check_matching_theorem(const SimpleGraph& g, bool solvable) {
  Verdict v = make("matching", "claw-free perfect matching", Assumption::Solvable);
  if (!solvable) return inapplicable(v, kNeedsSolvable);
  if (!is_connected(g)) return inapplicable(v, "graph is disconnected");
  if (g.n() % 2 == 0) {
    auto pm = perfect_matching(g);
    v.witness["order"] = "even";
    if (pm) {
      v.status = Status::Pass;
      v.witness["matching"] = edges_json(g, *pm);
    } else {
      v.status = Status::Fail;
      v.witness["maximum_matching"] = edges_json(g, maximum_matching(g));
    }
    return v;
  }
  if (articulation_points(g) != 0) return inapplicable(v, "odd order with a cut vertex");
  v.witness["order"] = "odd";
  for (Vertex x = 0; x < g.n(); ++x) {
    if (!has_perfect_matching(g.induced(g.all() & ~bit(x)))) {
      v.status = Status::Fail;
      v.witness["deleted_vertex_without_matching"] = g.label(x);
      return v;
    }
  }
  v.status = Status::Pass;
  v.witness["hypomatchable"] = true;
  return v;
}

Verdict classify_by_eigenvalues(const SimpleGraph& g, bool solvable) {
  Verdict v = make("eigenvalue_classification", "distinct eigenvalue classification", Assumption::Solvable);
  if (!solvable) return inapplicable(v, kNeedsSolvable);
  if (g.n() == 0) return inapplicable(v, "empty graph");
  const SpectrumSummary s = distinct_eigenvalue_count(g);
  const std::size_t n = g.n();
  v.witness["distinct_count"] = s.distinct_count;
  Json eig = Json::array();
  for (auto [value, mult] : s.integer_eigenvalues) eig.push_back({value, mult});
  v.witness["integer_eigenvalues"] = std::move(eig);
  v.witness["irrational_multiplicity"] = s.irrational_multiplicity;

  const auto k = regularity(g);
  if (s.distinct_count == 1) {
    v.witness["class"] = "one distinct eigenvalue";
    v.status = n <= 2 ? Status::Pass : Status::Fail;
    if (n > 2) v.witness["reason"] = "edgeless on more than two vertices";
  } else if (s.distinct_count == 2) {
    v.witness["class"] = "two distinct eigenvalues";
    v.status = is_complete(g) ? Status::Pass : Status::Fail;
    if (!v.passed()) v.witness["reason"] = "not a complete graph";
  } else if (s.distinct_count == 3 && k) {
    v.witness["class"] = "regular, three distinct eigenvalues";
    const auto srg = strongly_regular_parameters(g);
    const int ni = static_cast<int>(n);
    const SrgParameters expected{ni, ni - 2, ni - 4, ni - 2};
    if (srg) v.witness["srg"] = {srg->v, srg->k, srg->lambda, srg->mu};
    v.status = n >= 4 && n % 2 == 0 && srg == expected ? Status::Pass : Status::Fail;
    if (!v.passed()) v.witness["reason"] = "not K_n minus a perfect matching";
  } else {
    std::ostringstream os;
    os << s.distinct_count << " distinct eigenvalues" << (k ? ", regular" : ", not regular");
    v.witness["class"] = os.str();
    v.status = Status::Inapplicable;
    v.witness["reason"] = "no classification for this eigenvalue count";
  }
  return v;
}

Verdict check_two_component_sizes(const SimpleGraph& g) {
  Verdict v = make("two_component_sizes", "two-component order rule", Assumption::Solvable);
  const auto comps = components(g);
  if (comps.size() != 2) return inapplicable(v, "graph does not have exactly two components");
  int n1 = set_size(comps[0]);
  int n2 = set_size(comps[1]);
  if (n1 > n2) std::swap(n1, n2);
  const bool cliques = is_clique(g, comps[0]) && is_clique(g, comps[1]);
  const long long need = (1LL << n1) - 1;
  v.witness["n1"] = n1;
  v.witness["n2"] = n2;
  v.witness["components_complete"] = cliques;
  v.witness["required_n2"] = need;
  v.status = cliques && n2 >= need ? Status::Pass : Status::Fail;
  return v;
}

BisslerPartition bissler_partition(const SimpleGraph& g, Vertex p1, Vertex p4) {
  if (p1 >= g.n() || p4 >= g.n() || distances_from(g, p1)[p4] != 3) {
    throw Error(ErrorKind::NotDistanceThree, "endpoints are not at distance 3");
  }
  // The four layers cover the vertex set only when nothing lies farther out.
  if (diameter(g) != 3) throw Error(ErrorKind::NotDistanceThree, "graph does not have diameter 3");
  BisslerPartition p = layers(g, p1, p4);
  if (!balanced(p)) {
    BisslerPartition swapped = layers(g, p4, p1);
    if (balanced(swapped)) {
      swapped.relabeled = true;
      return swapped;
    }
  }
  return p;
}

Verdict check_diameter_three_constraints(const SimpleGraph& g) {
  Verdict v = make("diameter_three_constraints", "distance-three layer partition", Assumption::Solvable);
  const auto d = diameter(g);
  if (!d) return inapplicable(v, "graph is disconnected");
  if (*d != 3) {
    std::ostringstream os;
    os << "diameter is " << *d;
    return inapplicable(v, os.str());
  }
  const auto dist = distances(g);
  int pairs = 0;
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b = 0; b < g.n(); ++b) {
      if (dist[a][b] != 3) continue;
      ++pairs;
      const BisslerPartition p = bissler_partition(g, a, b);
      std::string rule;
      if (set_size(p.rho3) < 3) {
        rule = "|rho3| >= 3";
      } else if (set_size(p.rho1 | p.rho2) >= 3 && set_size(p.rho3 | p.rho4) < 8) {
        rule = "|rho3 u rho4| >= 8";
      }
      if (!rule.empty()) {
        v.status = Status::Fail;
        v.witness["violated"] = rule;
        v.witness["partition"] = partition_json(g, p);
        return v;
      }
    }
  }
  v.status = Status::Pass;
  v.witness["pairs_checked"] = pairs;
  v.witness["quantifier"] = "every ordered pair at distance 3";
  return v;
}

CutVertexStructure classify_cut_vertex_structure(const SimpleGraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "cut vertex classification needs a connected graph");
  CutVertexStructure out;
  const VertexSet cuts = articulation_points(g);
  if (cuts == 0) return out;
  const Vertex v = lowest(cuts);
  out.v = v;
  auto violation = [&](std::string reason) {
    out.kind = CutVertexKind::Violation;
    out.violation_reason = std::move(reason);
    return out;
  };
  if (set_size(cuts) >= 2) {
    std::ostringstream os;
    os << set_size(cuts) << " cut vertices, at most one allowed";
    return violation(os.str());
  }
  if (g.degree(v) == 2) {
    if (g.n() == 3) {
      out.kind = CutVertexKind::PathLengthTwo;
      return out;
    }
    return violation("cut vertex of degree 2 in a graph other than the 3-vertex path");
  }
  const int diam = *diameter(g);
  if (diam == 2) {
    out.kind = CutVertexKind::Diam2CutVertex;
    return out;
  }
  if (diam != 3) {
    std::ostringstream os;
    os << "diameter " << diam << " exceeds 3";
    return violation(os.str());
  }
  const auto comps = components_within(g, g.all() & ~bit(v));
  if (comps.size() != 2) {
    std::ostringstream os;
    os << "removing the cut vertex leaves " << comps.size() << " components";
    return violation(os.str());
  }
  if (!is_clique(g, comps[0]) || !is_clique(g, comps[1])) {
    return violation("a component of G - v is not a clique");
  }
  const VertexSet nv = g.neighbors(v);
  const int deg_v = g.degree(v);
  auto describe = [](const std::string& clause, int value) {
    std::ostringstream os;
    os << clause << " (got " << value << ")";
    return os.str();
  };

  for (int i = 0; i < 2; ++i) {
    if (set_size(comps[i]) != 1) continue;
    const VertexSet ks = comps[1 - i];
    out.w = lowest(comps[i]);
    out.s = set_size(ks);
    if (out.s < 4) return violation(describe("structure 1 needs s >= 4", out.s));
    if ((nv & ks) == ks) return violation("structure 1 needs v not complete to K_s");
    if (deg_v < 4) return violation(describe("structure 1 needs deg(v) >= 4", deg_v));
    out.kind = CutVertexKind::Structure1;
    return out;
  }

  for (const VertexSet c : comps) {
    if (set_size(nv & c) == 1) {
      return violation("v has exactly one neighbour in a component with at least two vertices");
    }
  }
  const bool full0 = (nv & comps[0]) == comps[0];
  const VertexSet ks = full0 ? comps[0] : comps[1];
  const VertexSet km = full0 ? comps[1] : comps[0];
  out.s = set_size(ks);
  out.m = set_size(km);
  const int inside = set_size(nv & km);
  if (out.m < 8) return violation(describe("structure 2 needs m >= 8", out.m));
  if (out.s < 2) return violation(describe("structure 2 needs s >= 2", out.s));
  if (!(inside > 1 && inside < out.m)) {
    return violation(describe("structure 2 needs 1 < |N(v) n K_m| < m", inside));
  }
  out.kind = CutVertexKind::Structure2;
  return out;
}

Verdict check_cut_vertex_structure(const SimpleGraph& g) {
  Verdict v = make("cut_vertex_structure", "cut vertex structure", Assumption::Solvable);
  if (!is_connected(g)) return inapplicable(v, "graph is disconnected");
  const CutVertexStructure s = classify_cut_vertex_structure(g);
  v.witness["kind"] = to_string(s.kind);
  if (s.v) v.witness["v"] = g.label(*s.v);
  if (s.w) v.witness["w"] = g.label(*s.w);
  if (s.kind == CutVertexKind::Structure1 || s.kind == CutVertexKind::Structure2) {
    v.witness["s"] = s.s;
    v.witness["deg_v"] = g.degree(*s.v);
  }
  if (s.kind == CutVertexKind::Structure2) {
    v.witness["m"] = s.m;
    v.witness["order"] = g.n();
  }
  if (s.kind == CutVertexKind::Violation) {
    v.status = Status::Fail;
    v.witness["reason"] = s.violation_reason;
  } else {
    v.status = Status::Pass;
  }
  return v;
}

bool is_path_or_paw(const SimpleGraph& g) {
  if (!is_connected(g)) return false;
  if (g.n() == 3) return edge_count(g) == 2;
  if (g.n() != 4 || edge_count(g) != 4) return false;
  std::vector<int> deg;
  for (Vertex v = 0; v < 4; ++v) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end());
  return deg == std::vector<int>{1, 2, 2, 3};
}

Verdict check_cut_vertex_group_constraints(const PermGroup& group, const SimpleGraph& g, std::size_t class_cap) {
  Verdict v = make("cut_vertex_group_constraints", "normal complement and Fitting subgroup at a cut vertex",
                   Assumption::Solvable);
  if (!is_solvable(group)) return inapplicable(v, kNeedsSolvable);
  if (!is_connected(g)) return inapplicable(v, "graph is disconnected");
  const VertexSet cuts = articulation_points(g);
  if (cuts == 0) return inapplicable(v, "no cut vertex");

  const int n = static_cast<int>(g.n());
  const int omega = clique_number(g);
  const Subgroup fit = fitting_subgroup(group, class_cap);
  const bool fit_abelian = is_abelian(group, fit);
  const auto rho_fit = rho(character_degrees(subgroup_as_group(group, fit)));
  v.witness["fitting_order"] = fit.order();
  v.witness["fitting_abelian"] = fit_abelian;
  v.witness["rho_fitting"] = rho_fit;

  bool applied = false;
  bool violated = false;
  Json per_vertex = Json::array();
  for_each_vertex(cuts, [&](Vertex x) {
    const std::uint64_t r = g.label(x);
    Json entry;
    entry["r"] = r;
    if (omega < 4 && normal_p_complement(group, r, class_cap)) {
      const bool ok = n <= 4 && is_path_or_paw(g);
      entry["normal_complement_case"] = ok ? "pass" : "fail";
      applied = true;
      violated = violated || !ok;
    }
    const bool r_in_fit = std::find(rho_fit.begin(), rho_fit.end(), r) != rho_fit.end();
    if (omega < n - 1 && !r_in_fit && !fit_abelian) {
      const int k = static_cast<int>(rho_fit.size());
      const bool ok = k <= n - 2 && (k != n - 2 || n >= 6);
      entry["fitting_case"] = ok ? "pass" : "fail";
      applied = true;
      violated = violated || !ok;
    }
    per_vertex.push_back(std::move(entry));
  });
  v.witness["cut_vertices"] = std::move(per_vertex);
  if (!applied) return inapplicable(v, "hypotheses of neither case hold");
  v.status = violated ? Status::Fail : Status::Pass;
  return v;
}

Verdict verify_degree_two_quotient(const PermGroup& group, const DegreeMultiset& cd, std::size_t class_cap) {
  Verdict v = make("degree_two_quotient", "quotient with two degrees at a degree-two cut vertex",
                   Assumption::Solvable);
  if (!is_solvable(group)) return inapplicable(v, kNeedsSolvable);
  const SimpleGraph g = build_graph(cd).to_simple_graph();
  if (g.n() != 3 || edge_count(g) != 2 || !is_connected(g)) {
    return inapplicable(v, "character graph is not the 3-vertex path");
  }
  Vertex mid = 0;
  for (Vertex x = 0; x < 3; ++x) {
    if (g.degree(x) == 2) mid = x;
  }
  const std::uint64_t cut = g.label(mid);
  v.witness["cut_vertex"] = cut;

  bool matched = false;
  Json hits = Json::array();
  for (const auto& entry : quotient_degree_survey(group, class_cap)) {
    const auto distinct = entry.degrees.distinct_degrees();
    if (distinct.size() != 2) continue;
    const std::uint64_t f = distinct[1];
    const PermGroup q = quotient_group(group, entry.kernel);
    Json hit;
    hit["kernel_order"] = entry.kernel.order();
    hit["quotient_order"] = q.order();
    hit["f"] = f;
    bool ok = false;
    std::uint64_t p = 0;
    if (is_prime_power(q.order(), &p)) {
      hit["case"] = "p-group";
      hit["p"] = p;
      ok = p == cut;
    } else if (auto fr = frobenius_structure(q, class_cap);
               fr && fr->kernel_elementary_abelian && fr->complement.order() == f) {
      hit["case"] = "frobenius";
      hit["p"] = fr->kernel_prime;
      ok = fr->kernel_prime == cut || f % cut == 0;
    } else {
      hit["case"] = "unclassified";
    }
    hit["matches"] = ok;
    matched = matched || ok;
    hits.push_back(std::move(hit));
  }
  v.witness["quotients"] = std::move(hits);
  v.status = matched ? Status::Pass : Status::Fail;
  return v;
}

Verdict verify_degree_two_quotient(const PermGroup& group, std::size_t class_cap) {
  return verify_degree_two_quotient(group, character_degrees(group), class_cap);
}

Verdict check_hamiltonicity_theorem(const SimpleGraph& g, std::optional<bool> fitting_abelian, bool solvable) {
  Verdict v = make("hamiltonicity", "Hamiltonian cycle for regular or Fitting-abelian graphs", Assumption::Solvable);
  if (!solvable) return inapplicable(v, kNeedsSolvable);
  if (!is_connected(g)) return inapplicable(v, "graph is disconnected");
  const std::size_t n = g.n();
  if (n < 4) return inapplicable(v, "fewer than 4 vertices");
  const bool regular = regularity(g).has_value();
  bool complete_vertex = false;
  for (Vertex x = 0; x < n; ++x) complete_vertex = complete_vertex || g.degree(x) == static_cast<int>(n) - 1;

  std::string condition;
  if (regular && !is_complete(g)) {
    condition = "regular and not complete";
  } else if (!regular && !complete_vertex) {
    if (!fitting_abelian) return inapplicable(v, "needs F(G) abelian and no group was supplied");
    if (!*fitting_abelian) return inapplicable(v, "F(G) is not abelian");
    condition = "not regular, no complete vertex, F(G) abelian";
  } else if (regular) {
    return inapplicable(v, "complete graph");
  } else {
    return inapplicable(v, "has a vertex adjacent to all others");
  }
  v.witness["condition"] = condition;
  if (auto cycle = hamiltonian_cycle(g)) {
    v.status = Status::Pass;
    v.witness["cycle"] = labels_json(g, *cycle);
  } else {
    v.status = Status::Fail;
    v.witness["cycle"] = nullptr;
  }
  return v;
}

Verdict check_regular_structure(const SimpleGraph& g, bool solvable) {
  Verdict v = make("regular_structure", "regular character graphs", Assumption::Solvable);
  if (!solvable) return inapplicable(v, kNeedsSolvable);
  if (g.n() == 0) return inapplicable(v, "empty graph");
  const auto k = regularity(g);
  if (!k) return inapplicable(v, "graph is not regular");
  const int n = static_cast<int>(g.n());
  v.witness["n"] = n;
  v.witness["k"] = *k;
  if (is_complete(g)) {
    v.witness["shape"] = "complete";
    v.status = Status::Pass;
  } else if (*k == n - 2) {
    v.witness["shape"] = "(n-2)-regular";
    v.status = Status::Pass;
  } else {
    const auto comps = components(g);
    const bool two_cliques = comps.size() == 2 && is_clique(g, comps[0]) && is_clique(g, comps[1]);
    if (two_cliques && check_two_component_sizes(g).passed()) {
      v.witness["shape"] = "two complete components";
      v.status = Status::Pass;
    } else {
      v.witness["shape"] = "other";
      v.status = Status::Fail;
    }
  }
  return v;
}

Verdict check_ito_michler(const PermGroup& group, const DegreeMultiset& cd) {
  Verdict v = make("ito_michler", "Ito-Michler cross-check", Assumption::Any);
  bool ok = true;
  Json rows = Json::array();
  for (const auto& e : ito_michler_check(group, cd)) {
    Json row;
    row["prime"] = e.prime;
    row["divides_some_degree"] = e.divides_some_degree;
    row["sylow_normal_abelian"] = e.sylow_normal_abelian;
    row["consistent"] = e.consistent;
    ok = ok && e.consistent;
    rows.push_back(std::move(row));
  }
  v.witness["primes"] = std::move(rows);
  v.status = ok ? Status::Pass : Status::Fail;
  return v;
}

Verdict check_component_count(const SimpleGraph& g) {
  Verdict v = make("component_count", "at most two components", Assumption::Solvable);
  const auto k = components(g).size();
  v.witness["components"] = k;
  v.status = k <= 2 ? Status::Pass : Status::Fail;
  return v;
}

Verdict check_diameter_bound(const SimpleGraph& g) {
  Verdict v = make("diameter_bound", "diameter at most three", Assumption::Solvable);
  const auto d = diameter(g);
  if (!d) return inapplicable(v, "graph is disconnected");
  v.witness["diameter"] = *d;
  v.status = *d <= 3 ? Status::Pass : Status::Fail;
  return v;
}

Verdict check_order_five_diameter(const SimpleGraph& g) {
  Verdict v = make("order_five_diameter", "diameter on five vertices", Assumption::Solvable);
  if (g.n() != 5) return inapplicable(v, "graph does not have five vertices");
  const auto d = diameter(g);
  if (!d) return inapplicable(v, "graph is disconnected");
  v.witness["diameter"] = *d;
  v.status = *d <= 2 ? Status::Pass : Status::Fail;
  return v;
}

Verdict check_p4_exclusion(const SimpleGraph& g) {
  Verdict v = make("p4_exclusion", "the 4-vertex path is excluded", Assumption::Solvable);
  const bool p4 = g.n() == 4 && are_isomorphic(g, SimpleGraph::path(4));
  v.witness["is_p4"] = p4;
  v.status = p4 ? Status::Fail : Status::Pass;
  return v;
}

Verdict check_cut_vertex_count(const SimpleGraph& g) {
  Verdict v = make("cut_vertex_count", "at most one cut vertex", Assumption::Solvable);
  const VertexSet cuts = articulation_points(g);
  v.witness["cut_vertices"] = labels_json(g, cuts);
  v.status = set_size(cuts) <= 1 ? Status::Pass : Status::Fail;
  return v;
}

std::vector<Verdict> solvable_screen_checks(const SimpleGraph& g) {
  std::vector<Verdict> out;
  out.push_back(check_palfy(g));
  out.push_back(check_component_count(g));
  out.push_back(check_two_component_sizes(g));
  out.push_back(check_edge_bound(g, true));
  out.push_back(check_domination(g, true));
  out.push_back(check_diameter_bound(g));
  out.push_back(check_order_five_diameter(g));
  out.push_back(check_p4_exclusion(g));
  out.push_back(check_cut_vertex_count(g));
  out.push_back(check_cut_vertex_structure(g));
  out.push_back(check_diameter_three_constraints(g));
  out.push_back(check_regular_structure(g, true));
  out.push_back(check_chvatal_erdos(g));
  return out;
}

}  // namespace chargraph
