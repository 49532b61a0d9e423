#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chargraph/analysis.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/perm_group.hpp"
#include "chargraph/simple_graph.hpp"

namespace chargraph {

enum class FixtureKind { Group, DegreeSet, RawGraph };

std::string to_string(FixtureKind kind);

struct Fixture {
  std::string name;
  FixtureKind kind = FixtureKind::Group;
  std::string description;
  Json payload;
  // solvable, order, degrees, graph (edge-list string), analysis_mode,
  // checks (name -> status), provenance, plus per-fixture extras.
  Json expected;
};

std::vector<std::string> list_fixtures();

// Throws UnknownFixture.
Fixture load_fixture(const std::string& name);

// Throws ParseError when the fixture is of another kind.
PermGroup fixture_group(const Fixture& f, std::size_t cap = kDefaultGroupCap);
DegreeMultiset fixture_degrees(const Fixture& f);
SimpleGraph fixture_graph(const Fixture& f);

// Expected character graph, labeled as in the fixture.
SimpleGraph expected_graph(const Fixture& f);

SolvableMode fixture_mode(const Fixture& f);

// Runs the analysis in the fixture's own mode unless overridden.
AnalysisReport analyze_fixture(const Fixture& f, std::optional<SolvableMode> mode = std::nullopt);

Json to_json(const Fixture& f);

}  // namespace chargraph
