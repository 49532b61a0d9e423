#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chargraph/degrees.hpp"
#include "chargraph/perm_group.hpp"
#include "chargraph/simple_graph.hpp"

namespace chargraph {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inapplicable };

// Which solvability hypothesis a check relies on.
enum class Assumption { Any, Solvable, Nonsolvable };

std::string to_string(Status status);
std::string to_string(Assumption assumption);

struct Verdict {
  std::string name;
  Status status = Status::Inapplicable;
  Json witness = Json::object();
  std::string anchor;
  Assumption assumes = Assumption::Any;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
  Json to_json() const;
};

// Complement triangle-free (solvable groups).
Verdict check_palfy(const SimpleGraph& g);
// Complement K4-free (all groups).
Verdict check_moreto_tiep(const SimpleGraph& g);

// Exact integer comparison: 4m >= n(n-2) when solvable, 6m >= n(n-3)
// otherwise.
Verdict check_edge_bound(const SimpleGraph& g, bool solvable);
Verdict check_domination(const SimpleGraph& g, bool solvable);

// Fails iff g is connected without a Hamiltonian path. Throws
// SolverInconsistency if alpha <= kappa + 1 and the solver finds no path.
Verdict check_chvatal_erdos(const SimpleGraph& g);

Verdict check_matching_theorem(const SimpleGraph& g, bool solvable);
Verdict classify_by_eigenvalues(const SimpleGraph& g, bool solvable);
Verdict check_two_component_sizes(const SimpleGraph& g);

struct BisslerPartition {
  Vertex p1 = 0;
  Vertex p4 = 0;
  VertexSet rho1 = 0;
  VertexSet rho2 = 0;
  VertexSet rho3 = 0;
  VertexSet rho4 = 0;
  // Endpoints were swapped to get |rho1 u rho2| <= |rho3 u rho4|.
  bool relabeled = false;
};

// Distance layers around p1. Throws NotDistanceThree unless d(p1, p4) = 3 and
// g has diameter 3.
BisslerPartition bissler_partition(const SimpleGraph& g, Vertex p1, Vertex p4);

// Every ordered pair at distance three must give |rho3| >= 3, and
// |rho3 u rho4| >= 8 whenever |rho1 u rho2| >= 3.
Verdict check_diameter_three_constraints(const SimpleGraph& g);

enum class CutVertexKind { NoCutVertex, PathLengthTwo, Structure1, Structure2, Diam2CutVertex, Violation };

std::string to_string(CutVertexKind kind);

struct CutVertexStructure {
  CutVertexKind kind = CutVertexKind::NoCutVertex;
  std::optional<Vertex> v;
  std::optional<Vertex> w;  // pendant vertex of structure 1
  int s = 0;                // clique next to v
  int m = 0;                // far clique of structure 2
  std::string violation_reason;
};

// Throws NotConnected.
CutVertexStructure classify_cut_vertex_structure(const SimpleGraph& g);
Verdict check_cut_vertex_structure(const SimpleGraph& g);

// 3-vertex path or the triangle with one pendant edge.
bool is_path_or_paw(const SimpleGraph& g);

// Constraints on a cut vertex r of Delta(G) from a normal r-complement and
// from F(G). `g` must be labeled by primes.
Verdict check_cut_vertex_group_constraints(const PermGroup& group, const SimpleGraph& g,
                                           std::size_t class_cap = kDefaultClassCap);

// Looks for K normal with cd(G/K) = {1, f} when Delta(G) is the 3-vertex
// path, and classifies G/K as a p-group or a Frobenius group.
Verdict verify_degree_two_quotient(const PermGroup& group, const DegreeMultiset& cd,
                                   std::size_t class_cap = kDefaultClassCap);
Verdict verify_degree_two_quotient(const PermGroup& group, std::size_t class_cap = kDefaultClassCap);

// fitting_abelian is nullopt when no group is available.
Verdict check_hamiltonicity_theorem(const SimpleGraph& g, std::optional<bool> fitting_abelian, bool solvable);
Verdict check_regular_structure(const SimpleGraph& g, bool solvable);

Verdict check_ito_michler(const PermGroup& group, const DegreeMultiset& cd);

// Individual screener rules.
Verdict check_component_count(const SimpleGraph& g);
Verdict check_diameter_bound(const SimpleGraph& g);
Verdict check_order_five_diameter(const SimpleGraph& g);
Verdict check_p4_exclusion(const SimpleGraph& g);
Verdict check_cut_vertex_count(const SimpleGraph& g);

// Necessary conditions for g to be Delta(G) of a solvable G, in a fixed order.
std::vector<Verdict> solvable_screen_checks(const SimpleGraph& g);

// Vertex set as a JSON array of labels.
Json labels_json(const SimpleGraph& g, VertexSet s);
Json labels_json(const SimpleGraph& g, const std::vector<Vertex>& vs);

}  // namespace chargraph
