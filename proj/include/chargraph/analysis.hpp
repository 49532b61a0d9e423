#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chargraph/character_graph.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/perm_group.hpp"
#include "chargraph/simple_graph.hpp"
#include "chargraph/theorems.hpp"

namespace chargraph {

enum class SolvableMode { Solvable, Nonsolvable, Unknown, Auto };

// "true" | "false" | "unknown" | "auto"; throws ParseError otherwise.
SolvableMode parse_solvable_mode(const std::string& text);
std::string to_string(SolvableMode mode);

struct AnalysisReport {
  Json input = Json::object();
  SolvableMode mode = SolvableMode::Unknown;  // never Auto once resolved
  std::vector<Verdict> checks;
  std::optional<CharacterGraph> graph;

  // No failing check relies on `a` (checks assuming Any always count).
  bool consistent_with(Assumption a) const;
  // Solvable/Nonsolvable: no relevant failure. Unknown: at least one
  // hypothesis stays consistent.
  bool ok() const;
  // First failing check that makes ok() false.
  const Verdict* first_failure() const;
  const Verdict* find(const std::string& name) const;

  Json to_json() const;
  std::string to_text() const;
  std::string to_dot() const;
};

struct AnalysisOptions {
  std::size_t class_cap = kDefaultClassCap;
};

AnalysisReport analyze_group(const PermGroup& group, SolvableMode mode, const AnalysisOptions& options = {});
AnalysisReport analyze_degrees(const DegreeMultiset& degrees, SolvableMode mode);
AnalysisReport analyze_graph(const SimpleGraph& g, SolvableMode mode);

// Runs the necessary conditions for solvable character graphs in order;
// the report fails at the first failing rule.
AnalysisReport screen_solvable_feasibility(const SimpleGraph& g);

}  // namespace chargraph
