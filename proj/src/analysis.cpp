#include "chargraph/analysis.hpp"

#include <iomanip>
#include <sstream>

#include "chargraph/errors.hpp"
#include "chargraph/graph_algorithms.hpp"
#include "chargraph/permutation.hpp"

namespace chargraph {

namespace {

Verdict skipped(Verdict v) {
  v.status = Status::Inapplicable;
  v.witness = Json::object();
  v.witness["reason"] = "requires a solvable group";
  return v;
}

Verdict placeholder(std::string name, std::string anchor) {
  Verdict v;
  v.name = std::move(name);
  v.anchor = std::move(anchor);
  v.assumes = Assumption::Solvable;
  return skipped(std::move(v));
}

bool relevant(Assumption check, SolvableMode mode) {
  if (check == Assumption::Any) return true;
  if (mode == SolvableMode::Solvable) return check == Assumption::Solvable;
  if (mode == SolvableMode::Nonsolvable) return check == Assumption::Nonsolvable;
  return false;
}

// fitting_abelian is only consulted by the Hamiltonicity check, and only
// for non-regular graphs without a complete vertex.
std::optional<bool> fitting_abelian_if_needed(const PermGroup* group, const SimpleGraph& g,
                                              const AnalysisOptions& options) {
  if (group == nullptr || g.n() < 4 || regularity(g)) return std::nullopt;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == static_cast<int>(g.n()) - 1) return std::nullopt;
  }
  try {
    return is_abelian(*group, fitting_subgroup(*group, options.class_cap));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooManyClasses) throw;
    return std::nullopt;
  }
}

void run_checks(AnalysisReport& report, const SimpleGraph& g, const PermGroup* group, const DegreeMultiset* cd,
                const AnalysisOptions& options) {
  auto& out = report.checks;
  const SolvableMode mode = report.mode;
  out.push_back(check_moreto_tiep(g));
  if (group != nullptr && cd != nullptr) out.push_back(check_ito_michler(*group, *cd));

  std::vector<Verdict> solvable_block = solvable_screen_checks(g);
  if (mode == SolvableMode::Nonsolvable) {
    for (auto& v : solvable_block) out.push_back(skipped(std::move(v)));
    out.push_back(check_matching_theorem(g, false));
    out.push_back(classify_by_eigenvalues(g, false));
    out.push_back(check_hamiltonicity_theorem(g, std::nullopt, false));
    if (group != nullptr) {
      out.push_back(placeholder("cut_vertex_group_constraints",
                                "normal complement and Fitting subgroup at a cut vertex"));
      out.push_back(placeholder("degree_two_quotient", "quotient with two degrees at a degree-two cut vertex"));
    }
  } else {
    for (auto& v : solvable_block) out.push_back(std::move(v));
    out.push_back(check_matching_theorem(g, true));
    out.push_back(classify_by_eigenvalues(g, true));
    out.push_back(check_hamiltonicity_theorem(g, fitting_abelian_if_needed(group, g, options), true));
    if (group != nullptr && cd != nullptr) {
      out.push_back(check_cut_vertex_group_constraints(*group, g, options.class_cap));
      out.push_back(verify_degree_two_quotient(*group, *cd, options.class_cap));
    }
  }
  if (mode != SolvableMode::Solvable) {
    out.push_back(check_edge_bound(g, false));
    out.push_back(check_domination(g, false));
  }
}

SolvableMode resolve_without_group(SolvableMode mode) {
  if (mode == SolvableMode::Auto) {
    throw Error(ErrorKind::ParseError, "solvability 'auto' needs a group input");
  }
  return mode;
}

}  // namespace

SolvableMode parse_solvable_mode(const std::string& text) {
  if (text == "true") return SolvableMode::Solvable;
  if (text == "false") return SolvableMode::Nonsolvable;
  if (text == "unknown") return SolvableMode::Unknown;
  if (text == "auto") return SolvableMode::Auto;
  throw Error(ErrorKind::ParseError, "solvable must be one of true, false, unknown, auto");
}

std::string to_string(SolvableMode mode) {
  switch (mode) {
    case SolvableMode::Solvable: return "true";
    case SolvableMode::Nonsolvable: return "false";
    case SolvableMode::Unknown: return "unknown";
    case SolvableMode::Auto: return "auto";
  }
  return "unknown";
}

bool AnalysisReport::consistent_with(Assumption a) const {
  for (const auto& v : checks) {
    if (v.failed() && (v.assumes == Assumption::Any || v.assumes == a)) return false;
  }
  return true;
}

bool AnalysisReport::ok() const {
  switch (mode) {
    case SolvableMode::Solvable: return consistent_with(Assumption::Solvable);
    case SolvableMode::Nonsolvable: return consistent_with(Assumption::Nonsolvable);
    default: return consistent_with(Assumption::Solvable) || consistent_with(Assumption::Nonsolvable);
  }
}

const Verdict* AnalysisReport::first_failure() const {
  if (ok()) return nullptr;
  for (const auto& v : checks) {
    if (!v.failed()) continue;
    if (mode == SolvableMode::Unknown || relevant(v.assumes, mode)) return &v;
  }
  return nullptr;
}

const Verdict* AnalysisReport::find(const std::string& name) const {
  for (const auto& v : checks) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

Json AnalysisReport::to_json() const {
  Json out;
  out["input"] = input;
  out["solvable"] = to_string(mode);
  Json list = Json::array();
  for (const auto& v : checks) list.push_back(v.to_json());
  out["checks"] = std::move(list);
  Json summary;
  summary["status"] = ok() ? "pass" : "fail";
  const Verdict* first = first_failure();
  summary["first_failure"] = first ? Json(first->name) : Json(nullptr);
  if (mode == SolvableMode::Unknown) {
    summary["consistent_with"] = {{"solvable", consistent_with(Assumption::Solvable)},
                                  {"nonsolvable", consistent_with(Assumption::Nonsolvable)}};
  }
  out["summary"] = std::move(summary);
  return out;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  os << "input: " << input.dump() << '\n';
  for (const auto& v : checks) {
    os << std::left << std::setw(13) << to_string(v.status) << std::setw(30) << v.name << std::setw(12)
       << to_string(v.assumes) << v.witness.dump() << '\n';
  }
  const Verdict* first = first_failure();
  os << "result: " << (ok() ? "pass" : "fail");
  if (first != nullptr) os << " (first failure: " << first->name << ")";
  os << '\n';
  return os.str();
}

std::string AnalysisReport::to_dot() const {
  if (!graph) return "graph Delta {\n}\n";
  const SimpleGraph g = graph->to_simple_graph();
  std::vector<std::uint64_t> cuts;
  for_each_vertex(articulation_points(g), [&](Vertex v) { cuts.push_back(g.label(v)); });
  return chargraph::to_dot(*graph, cuts);
}

AnalysisReport analyze_group(const PermGroup& group, SolvableMode mode, const AnalysisOptions& options) {
  AnalysisReport report;
  const bool solvable = is_solvable(group);
  report.mode = mode == SolvableMode::Auto ? (solvable ? SolvableMode::Solvable : SolvableMode::Nonsolvable) : mode;
  const DegreeMultiset cd = character_degrees(group);
  report.graph = build_graph(cd);
  const SimpleGraph g = report.graph->to_simple_graph();

  Json gens = Json::array();
  for (const auto& p : group.generators()) gens.push_back(p.to_cycle_string());
  report.input["kind"] = "group";
  report.input["generators"] = std::move(gens);
  report.input["order"] = group.order();
  report.input["classes"] = group.conjugacy_classes().size();
  report.input["group_solvable"] = solvable;
  report.input["degrees"] = cd.expanded();
  report.input["graph"] = chargraph::to_json(*report.graph);
  run_checks(report, g, &group, &cd, options);
  return report;
}

AnalysisReport analyze_degrees(const DegreeMultiset& degrees, SolvableMode mode) {
  AnalysisReport report;
  report.mode = resolve_without_group(mode);
  report.graph = build_graph(degrees);
  report.input["kind"] = "degree-set";
  report.input["degrees"] = degrees.expanded();
  report.input["graph"] = chargraph::to_json(*report.graph);
  run_checks(report, report.graph->to_simple_graph(), nullptr, nullptr, {});
  return report;
}

AnalysisReport analyze_graph(const SimpleGraph& g, SolvableMode mode) {
  AnalysisReport report;
  report.mode = resolve_without_group(mode);
  report.graph = CharacterGraph::from_simple_graph(g);
  report.input["kind"] = "raw-graph";
  report.input["graph"] = chargraph::to_json(*report.graph);
  run_checks(report, g, nullptr, nullptr, {});
  return report;
}

AnalysisReport screen_solvable_feasibility(const SimpleGraph& g) {
  AnalysisReport report;
  report.mode = SolvableMode::Solvable;
  report.graph = CharacterGraph::from_simple_graph(g);
  report.input["kind"] = "raw-graph";
  report.input["graph"] = chargraph::to_json(*report.graph);
  report.checks = solvable_screen_checks(g);
  return report;
}

}  // namespace chargraph
