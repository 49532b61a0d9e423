#include <doctest.h>

#include <random>
#include <tuple>

#include "chargraph/analysis.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/errors.hpp"
#include "chargraph/graph_algorithms.hpp"
#include "chargraph/theorems.hpp"
#include "test_support.hpp"

using namespace chargraph;
using testing::graph_from_mask;
using testing::mask_count;
using testing::pendant_clique;
using testing::two_cliques_through;

namespace {

SimpleGraph union_of(std::initializer_list<SimpleGraph> parts) {
  SimpleGraph out;
  for (const auto& p : parts) out = SimpleGraph::disjoint_union(out, p);
  return out;
}

SimpleGraph k(std::size_t n) { return SimpleGraph::complete(n); }

SimpleGraph paw() { return SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

// r - v - s, with s joined to a K_2.
SimpleGraph rvs_k2() { return SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

SimpleGraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  }
  SimpleGraph g(10);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [x, y] = pairs[b];
      if (i != x && i != y && j != x && j != y) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return g;
}

// (C11 : C5) x S4 has degrees {1, 2, 3, 5, 10, 15}: the path 2 - 5 - 3.
PermGroup path_group() {
  return direct_product(testing::group("(1 2 3 4 5 6 7 8 9 10 11),(2 4 10 6 5)(3 7 8 11 9)"),
                        testing::group("(1 2),(1 2 3 4)"));
}

bool passes_screen(const SimpleGraph& g) {
  for (const auto& v : solvable_screen_checks(g)) {
    if (v.failed()) return false;
  }
  return true;
}

std::string first_screen_failure(const SimpleGraph& g) {
  const auto report = screen_solvable_feasibility(g);
  const Verdict* f = report.first_failure();
  return f ? f->name : "";
}

}  // namespace

TEST_CASE("Palfy and Moreto-Tiep conditions") {
  const auto star = check_palfy(SimpleGraph::star(3));
  CHECK(star.failed());
  CHECK(star.witness["pairwise_nonadjacent"] == Json::array({1, 2, 3}));
  CHECK(check_palfy(union_of({k(2), k(1)})).passed());
  const SimpleGraph psl = union_of({k(2), k(1), k(1)});
  CHECK(check_palfy(psl).failed());
  CHECK(check_moreto_tiep(psl).passed());
  CHECK(check_moreto_tiep(SimpleGraph(4)).failed());
  CHECK(check_palfy(SimpleGraph(0)).passed());
}

TEST_CASE("edge bounds use exact rationals") {
  const auto two = check_edge_bound(SimpleGraph(2), true);
  CHECK(two.passed());
  CHECK(two.witness["bound"] == "0");
  const auto psl = check_edge_bound(union_of({k(2), k(1), k(1)}), false);
  CHECK(psl.passed());
  CHECK(psl.witness["bound"] == "2/3");
  CHECK(psl.name == "edge_bound/nonsolvable");
  const auto empty4 = check_edge_bound(SimpleGraph(4), true);
  CHECK(empty4.failed());
  CHECK(empty4.witness["bound"] == "2");
  // n = 5: bound 15/4, so m = 3 fails and m = 4 passes.
  CHECK(check_edge_bound(union_of({SimpleGraph::path(4), k(1)}), true).failed());
  CHECK(check_edge_bound(SimpleGraph::path(5), true).passed());
}

TEST_CASE("domination bounds") {
  const auto fig = check_domination(union_of({k(2), k(1)}), true);
  CHECK(fig.passed());
  CHECK(fig.witness["gamma"] == 2);
  const auto psl = check_domination(union_of({k(2), k(1), k(1)}), false);
  CHECK(psl.passed());
  CHECK(psl.witness["gamma"] == 3);
  CHECK(check_domination(union_of({k(2), k(1), k(1)}), true).failed());
  CHECK(check_domination(k(5), true).witness["gamma"] == 1);
}

TEST_CASE("Chvatal-Erdos check") {
  const auto star = check_chvatal_erdos(SimpleGraph::star(3));
  CHECK(star.failed());
  CHECK(star.witness["alpha"] == 3);
  CHECK(star.witness["kappa"] == 1);
  const auto c5 = check_chvatal_erdos(SimpleGraph::cycle(5));
  CHECK(c5.passed());
  CHECK(c5.witness["path"].size() == 5);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(check_chvatal_erdos(k(n)).passed());
  CHECK(check_chvatal_erdos(SimpleGraph(2)).status == Status::Inapplicable);
}

TEST_CASE("matching theorem") {
  CHECK(check_matching_theorem(SimpleGraph::cocktail_party(4), true).passed());
  CHECK(check_matching_theorem(SimpleGraph::star(3), true).failed());
  const auto c5 = check_matching_theorem(SimpleGraph::cycle(5), true);
  CHECK(c5.passed());
  CHECK(c5.witness["hypomatchable"] == true);
  CHECK(check_matching_theorem(SimpleGraph::path(3), true).status == Status::Inapplicable);
  CHECK(check_matching_theorem(SimpleGraph::cycle(5), false).status == Status::Inapplicable);
}

TEST_CASE("eigenvalue classification") {
  const auto two = classify_by_eigenvalues(SimpleGraph(2), true);
  CHECK(two.passed());
  CHECK(two.witness["class"] == "one distinct eigenvalue");
  const auto k3 = classify_by_eigenvalues(k(3), true);
  CHECK(k3.passed());
  CHECK(k3.witness["class"] == "two distinct eigenvalues");
  const auto k8m = classify_by_eigenvalues(SimpleGraph::cocktail_party(8), true);
  CHECK(k8m.passed());
  CHECK(k8m.witness["class"] == "regular, three distinct eigenvalues");
  CHECK(k8m.witness["srg"] == Json::array({8, 6, 4, 6}));
  CHECK(classify_by_eigenvalues(SimpleGraph(3), true).failed());
  CHECK(classify_by_eigenvalues(union_of({k(3), k(3)}), true).failed());
  CHECK(classify_by_eigenvalues(SimpleGraph::cycle(5), true).failed());
  CHECK(classify_by_eigenvalues(SimpleGraph::path(3), true).status == Status::Inapplicable);
  CHECK(classify_by_eigenvalues(k(3), false).status == Status::Inapplicable);
}

TEST_CASE("two-component size rule") {
  CHECK(check_two_component_sizes(SimpleGraph(2)).passed());
  CHECK(check_two_component_sizes(union_of({k(2), k(2)})).failed());
  CHECK(check_two_component_sizes(union_of({k(1), k(3)})).passed());
  CHECK(check_two_component_sizes(union_of({k(2), k(3)})).passed());
  CHECK(check_two_component_sizes(union_of({k(3), k(6)})).failed());
  CHECK(check_two_component_sizes(union_of({k(3), k(7)})).passed());
  CHECK(check_two_component_sizes(union_of({k(1), SimpleGraph::path(3)})).failed());
  CHECK(check_two_component_sizes(k(3)).status == Status::Inapplicable);
}

TEST_CASE("distance-three partitions") {
  const SimpleGraph g = pendant_clique(5, 4);
  const auto p = bissler_partition(g, 0, 6);
  CHECK(p.rho1 == bit(0));
  CHECK(p.rho2 == bit(1));
  CHECK(p.rho3 == (g.neighbors(1) & ~bit(0)));
  CHECK(p.rho4 == bit(6));
  CHECK_FALSE(p.relabeled);
  const auto swapped = bissler_partition(g, 6, 0);
  CHECK(swapped.relabeled);
  CHECK(swapped.p1 == 0);
  CHECK(swapped.rho3 == p.rho3);

  const auto p4 = bissler_partition(SimpleGraph::path(4), 0, 3);
  CHECK(p4.rho1 == bit(0));
  CHECK(p4.rho2 == bit(1));
  CHECK(p4.rho3 == bit(2));
  CHECK(p4.rho4 == bit(3));

  for (const auto& [g, a, b] : {std::tuple{SimpleGraph::cycle(5), 0U, 2U}, std::tuple{SimpleGraph::path(5), 0U, 3U}}) {
    try {
      bissler_partition(g, a, b);
      FAIL("expected NotDistanceThree");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotDistanceThree);
    }
  }
}

TEST_CASE("distance-three constraints") {
  const auto p4 = check_diameter_three_constraints(SimpleGraph::path(4));
  CHECK(p4.failed());
  CHECK(p4.witness["violated"] == "|rho3| >= 3");
  CHECK(check_diameter_three_constraints(rvs_k2()).failed());
  CHECK(check_diameter_three_constraints(pendant_clique(5, 4)).passed());
  CHECK(check_diameter_three_constraints(SimpleGraph::cycle(5)).status == Status::Inapplicable);
  // |rho1 u rho2| = 3 forces |rho3 u rho4| >= 8.
  const auto small = check_diameter_three_constraints(two_cliques_through(4, 2, 3));
  CHECK(small.failed());
  CHECK(small.witness["violated"] == "|rho3 u rho4| >= 8");
  CHECK(check_diameter_three_constraints(two_cliques_through(8, 2, 4)).passed());
}

TEST_CASE("cut vertex classification") {
  const auto p3 = classify_cut_vertex_structure(SimpleGraph::path(3));
  CHECK(p3.kind == CutVertexKind::PathLengthTwo);
  CHECK(p3.v == 1U);
  CHECK(classify_cut_vertex_structure(paw()).kind == CutVertexKind::Diam2CutVertex);

  const auto s1 = classify_cut_vertex_structure(pendant_clique(5, 4));
  CHECK(s1.kind == CutVertexKind::Structure1);
  CHECK(s1.v == 1U);
  CHECK(s1.w == 0U);
  CHECK(s1.s == 5);

  const auto s2 = classify_cut_vertex_structure(two_cliques_through(8, 2, 4));
  CHECK(s2.kind == CutVertexKind::Structure2);
  CHECK(s2.v == 8U);
  CHECK(s2.m == 8);
  CHECK(s2.s == 2);

  const auto bad = classify_cut_vertex_structure(pendant_clique(4, 2));
  CHECK(bad.kind == CutVertexKind::Violation);
  CHECK(bad.violation_reason.find("deg(v) >= 4") != std::string::npos);

  CHECK(classify_cut_vertex_structure(SimpleGraph::path(5)).kind == CutVertexKind::Violation);
  CHECK(classify_cut_vertex_structure(k(4)).kind == CutVertexKind::NoCutVertex);
  CHECK(classify_cut_vertex_structure(two_cliques_through(7, 2, 4)).kind == CutVertexKind::Violation);
  CHECK(classify_cut_vertex_structure(two_cliques_through(8, 2, 8)).kind == CutVertexKind::Diam2CutVertex);
  try {
    classify_cut_vertex_structure(SimpleGraph(2));
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConnected);
  }
  const auto verdict = check_cut_vertex_structure(pendant_clique(4, 2));
  CHECK(verdict.failed());
  CHECK(verdict.witness["kind"] == "violation");
}

TEST_CASE("path-or-paw shapes") {
  CHECK(is_path_or_paw(SimpleGraph::path(3)));
  CHECK(is_path_or_paw(paw()));
  CHECK_FALSE(is_path_or_paw(SimpleGraph::path(4)));
  CHECK_FALSE(is_path_or_paw(SimpleGraph::star(3)));
  CHECK_FALSE(is_path_or_paw(SimpleGraph::cycle(4)));
}

TEST_CASE("group constraints at a cut vertex") {
  const PermGroup s3 = testing::group("(1 2),(1 2 3)");
  const auto g = build_graph(character_degrees(s3)).to_simple_graph();
  CHECK(check_cut_vertex_group_constraints(s3, g).status == Status::Inapplicable);

  const PermGroup a5 = testing::group("(1 2 3 4 5),(3 4 5)");
  const auto a5g = build_graph(character_degrees(a5)).to_simple_graph();
  CHECK(check_cut_vertex_group_constraints(a5, a5g).witness["reason"] == "requires a solvable group");

  const PermGroup grp = path_group();
  const DegreeMultiset cd = character_degrees(grp);
  CHECK(cd.distinct_degrees() == std::vector<std::uint64_t>{1, 2, 3, 5, 10, 15});
  const auto pg = build_graph(cd).to_simple_graph();
  REQUIRE(is_path_or_paw(pg));
  const auto v = check_cut_vertex_group_constraints(grp, pg, 64);
  CHECK(v.passed());
  CHECK(v.witness["fitting_abelian"] == true);
  CHECK(v.witness["cut_vertices"][0]["r"] == 5);
  CHECK(v.witness["cut_vertices"][0]["normal_complement_case"] == "pass");
}

TEST_CASE("degree-two cut vertex quotient") {
  CHECK(verify_degree_two_quotient(testing::group("(1 2),(1 2 3)")).status == Status::Inapplicable);
  const PermGroup q8 = testing::group("(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)");
  for (const auto& q : quotient_degree_survey(q8)) {
    if (q.kernel.order() == 2) CHECK(q.degrees.distinct_degrees() == std::vector<std::uint64_t>{1});
  }
  const auto v = verify_degree_two_quotient(path_group(), 64);
  CHECK(v.passed());
  CHECK(v.witness["cut_vertex"] == 5);
  bool frobenius = false;
  for (const auto& hit : v.witness["quotients"]) {
    if (hit["case"] == "frobenius" && hit["matches"] == true) {
      frobenius = true;
      CHECK(hit["quotient_order"] == 55);
      CHECK(hit["f"] == 5);
      CHECK(hit["p"] == 11);
    }
  }
  CHECK(frobenius);
}

TEST_CASE("Hamiltonicity theorem") {
  const auto k6m = check_hamiltonicity_theorem(SimpleGraph::cocktail_party(6), std::nullopt, true);
  CHECK(k6m.passed());
  CHECK(k6m.witness["cycle"].size() == 6);
  CHECK(check_hamiltonicity_theorem(k(4), std::nullopt, true).status == Status::Inapplicable);
  CHECK(check_hamiltonicity_theorem(SimpleGraph::cocktail_party(8), std::nullopt, true).passed());

  SimpleGraph chord = SimpleGraph::cycle(6);
  chord.add_edge(0, 3);
  CHECK(check_hamiltonicity_theorem(chord, true, true).passed());
  CHECK(check_hamiltonicity_theorem(chord, false, true).status == Status::Inapplicable);
  CHECK(check_hamiltonicity_theorem(chord, std::nullopt, true).status == Status::Inapplicable);
  CHECK(check_hamiltonicity_theorem(SimpleGraph::star(4), true, true).status == Status::Inapplicable);
  // Regular, connected, not complete and not Hamiltonian: such a graph cannot be Delta(G).
  CHECK(check_hamiltonicity_theorem(petersen(), std::nullopt, true).failed());
}

TEST_CASE("regular structure rule") {
  CHECK(check_regular_structure(SimpleGraph::cycle(5), true).failed());
  CHECK(check_regular_structure(SimpleGraph::cocktail_party(6), true).passed());
  CHECK(check_regular_structure(k(7), true).passed());
  CHECK(check_regular_structure(SimpleGraph(2), true).passed());
  CHECK(check_regular_structure(union_of({k(2), k(2)}), true).failed());
  CHECK(check_regular_structure(SimpleGraph::path(3), true).status == Status::Inapplicable);
}

TEST_CASE("screener") {
  CHECK(first_screen_failure(SimpleGraph::star(3)) == "palfy");
  CHECK(first_screen_failure(SimpleGraph::path(4)) == "p4_exclusion");
  const auto fig = screen_solvable_feasibility(union_of({k(2), k(1)}));
  CHECK(fig.ok());
  CHECK(fig.first_failure() == nullptr);
  // Diameter four forces an independent triple, so Palfy fires first.
  CHECK(first_screen_failure(SimpleGraph::path(5)) == "palfy");
  CHECK(first_screen_failure(union_of({k(1), k(1), k(1)})) == "palfy");
  CHECK(first_screen_failure(rvs_k2()) == "order_five_diameter");
  CHECK(first_screen_failure(pendant_clique(4, 2)) == "cut_vertex_structure");
  CHECK(screen_solvable_feasibility(pendant_clique(5, 4)).ok());
  CHECK(screen_solvable_feasibility(two_cliques_through(8, 2, 4)).ok());

  std::vector<std::string> names;
  for (const auto& v : screen_solvable_feasibility(k(3)).checks) names.push_back(v.name);
  CHECK(names == std::vector<std::string>{"palfy", "component_count", "two_component_sizes", "edge_bound/solvable",
                                          "domination/solvable", "diameter_bound", "order_five_diameter",
                                          "p4_exclusion", "cut_vertex_count", "cut_vertex_structure",
                                          "diameter_three_constraints", "regular_structure", "chvatal_erdos"});
}

TEST_CASE("every screener-passing connected graph on up to 6 vertices has at most one cut vertex") {
  std::size_t passing = 0;
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
      const SimpleGraph g = graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      const auto s = classify_cut_vertex_structure(g);
      if (set_size(articulation_points(g)) >= 2) REQUIRE(s.kind == CutVertexKind::Violation);
      if (!passes_screen(g)) continue;
      ++passing;
      REQUIRE(set_size(articulation_points(g)) <= 1);
    }
  }
  CHECK(passing > 0);
}

TEST_CASE("screener-passing graphs with a cut vertex and diameter three have a known structure") {
  auto verify = [](const SimpleGraph& g) {
    if (set_size(articulation_points(g)) != 1 || diameter(g) != 3 || !passes_screen(g)) return false;
    const auto s = classify_cut_vertex_structure(g);
    REQUIRE((s.kind == CutVertexKind::Structure1 || s.kind == CutVertexKind::Structure2));
    REQUIRE(g.degree(*s.v) >= 4);
    return true;
  };
  std::size_t found = 0;
  for (int n = 4; n <= 7; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
      const SimpleGraph g = graph_from_mask(n, mask);
      if (is_connected(g) && verify(g)) ++found;
    }
  }
  CHECK(found > 0);
  std::size_t structure2 = 0;
  for (int s = 1; s + 2 <= 12; ++s) {
    for (int hits = 1; hits <= s; ++hits) found += verify(pendant_clique(s, hits)) ? 1 : 0;
  }
  for (int m = 2; m <= 10; ++m) {
    for (int s = 1; m + 1 + s <= 12; ++s) {
      for (int hits = 1; hits <= m; ++hits) {
        const SimpleGraph g = two_cliques_through(m, s, hits);
        if (verify(g) && classify_cut_vertex_structure(g).kind == CutVertexKind::Structure2) ++structure2;
      }
    }
  }
  CHECK(structure2 > 0);
}

TEST_CASE("distance-three partitions are exact partitions on all connected graphs up to 7 vertices") {
  std::size_t pairs = 0;
  for (int n = 4; n <= 7; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) {
      const SimpleGraph g = graph_from_mask(n, mask);
      if (!is_connected(g) || diameter(g) < 3) continue;
      const bool diameter_three = diameter(g) == 3;
      const auto dist = distances(g);
      for (Vertex a = 0; a < g.n(); ++a) {
        for (Vertex b = 0; b < g.n(); ++b) {
          if (dist[a][b] != 3) continue;
          if (!diameter_three) {
            REQUIRE_THROWS_AS(bissler_partition(g, a, b), Error);
            continue;
          }
          ++pairs;
          const auto p = bissler_partition(g, a, b);
          REQUIRE((p.rho1 & p.rho2) == 0);
          REQUIRE(((p.rho1 | p.rho2) & (p.rho3 | p.rho4)) == 0);
          REQUIRE((p.rho3 & p.rho4) == 0);
          REQUIRE((p.rho1 | p.rho2 | p.rho3 | p.rho4) == g.all());
          const auto d = distances_from(g, p.p1);
          for (Vertex q = 0; q < g.n(); ++q) {
            REQUIRE(((p.rho4 >> q) & 1U) == (d[q] == 3 ? 1U : 0U));
            REQUIRE(((p.rho3 >> q) & 1U) == (d[q] == 2 ? 1U : 0U));
          }
          REQUIRE(p.relabeled == (p.p1 != a));
        }
      }
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("analysis modes") {
  const auto star_unknown = analyze_graph(SimpleGraph::star(3), SolvableMode::Unknown);
  CHECK(star_unknown.find("palfy")->failed());
  CHECK_FALSE(star_unknown.consistent_with(Assumption::Solvable));
  CHECK(star_unknown.consistent_with(Assumption::Nonsolvable));
  CHECK(star_unknown.ok());
  CHECK(star_unknown.to_json()["summary"]["consistent_with"]["nonsolvable"] == true);

  const auto star_solvable = analyze_graph(SimpleGraph::star(3), SolvableMode::Solvable);
  CHECK_FALSE(star_solvable.ok());
  CHECK(star_solvable.first_failure()->name == "palfy");

  const auto empty = analyze_graph(SimpleGraph(4), SolvableMode::Unknown);
  CHECK_FALSE(empty.ok());
  CHECK(empty.first_failure()->name == "moreto_tiep");

  const auto psl = analyze_degrees(psl2_2n_degrees(4), SolvableMode::Nonsolvable);
  CHECK(psl.ok());
  CHECK(psl.find("palfy")->status == Status::Inapplicable);
  CHECK(psl.find("domination/nonsolvable")->witness["gamma"] == 3);

  CHECK_THROWS_AS(analyze_graph(k(2), SolvableMode::Auto), Error);
  CHECK(parse_solvable_mode("unknown") == SolvableMode::Unknown);
  CHECK_THROWS_AS(parse_solvable_mode("maybe"), Error);

  const auto s3 = analyze_group(testing::group("(1 2),(1 2 3)"), SolvableMode::Auto);
  CHECK(s3.mode == SolvableMode::Solvable);
  CHECK(s3.ok());
  CHECK(s3.input["degrees"] == Json::array({1, 1, 2}));
  CHECK(s3.find("ito_michler")->passed());
  const auto a5 = analyze_group(testing::group("(1 2 3 4 5),(3 4 5)"), SolvableMode::Auto);
  CHECK(a5.mode == SolvableMode::Nonsolvable);
  CHECK(a5.ok());
}

TEST_CASE("report rendering") {
  const auto r = analyze_degrees(psl2_2n_degrees(4), SolvableMode::Nonsolvable);
  const Json j = r.to_json();
  CHECK(j["solvable"] == "false");
  CHECK(j["summary"]["status"] == "pass");
  CHECK(j["summary"]["first_failure"].is_null());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("witness"));
    CHECK(c.contains("anchor"));
    if (c["status"] == "fail") CHECK_FALSE(c["witness"].empty());
    if (c["status"] == "inapplicable") CHECK(c["witness"].contains("reason"));
  }
  const std::string text = r.to_text();
  CHECK(text.find("result: pass") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(r.checks.size()) + 2);
  CHECK(r.to_dot().find("p3 -- p5") != std::string::npos);
}

TEST_CASE("failing verdicts always carry witnesses") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    std::uniform_int_distribution<std::uint64_t> pick(0, mask_count(n) - 1);
    const auto r = analyze_graph(graph_from_mask(n, pick(rng)), SolvableMode::Unknown);
    for (const auto& v : r.checks) {
      if (v.failed()) REQUIRE_FALSE(v.witness.empty());
      if (v.status == Status::Inapplicable) REQUIRE(v.witness.contains("reason"));
    }
  }
}
