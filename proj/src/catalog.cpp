#include "chargraph/catalog.hpp"

#include <algorithm>

#include "chargraph/errors.hpp"
#include "chargraph/permutation.hpp"
#include "fixture_data.hpp"

namespace chargraph {

namespace {

FixtureKind parse_kind(const std::string& text) {
  if (text == "group") return FixtureKind::Group;
  if (text == "degree-set") return FixtureKind::DegreeSet;
  if (text == "raw-graph") return FixtureKind::RawGraph;
  throw Error(ErrorKind::ParseError, "unknown fixture kind '" + text + "'");
}

void require_kind(const Fixture& f, FixtureKind kind) {
  if (f.kind != kind) {
    throw Error(ErrorKind::ParseError, "fixture '" + f.name + "' is a " + to_string(f.kind) + " fixture");
  }
}

}  // namespace

std::string to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::Group: return "group";
    case FixtureKind::DegreeSet: return "degree-set";
    case FixtureKind::RawGraph: return "raw-graph";
  }
  return "unknown";
}

std::vector<std::string> list_fixtures() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::embedded_fixtures()) names.emplace_back(name);
  return names;
}

Fixture load_fixture(const std::string& name) {
  const auto& all = detail::embedded_fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.first == name; });
  if (it == all.end()) throw Error(ErrorKind::UnknownFixture, "no fixture named '" + name + "'");
  const Json j = Json::parse(it->second);
  Fixture f;
  f.name = j.at("name").get<std::string>();
  f.kind = parse_kind(j.at("kind").get<std::string>());
  f.description = j.value("description", "");
  f.payload = j.at("payload");
  f.expected = j.value("expected", Json::object());
  return f;
}

PermGroup fixture_group(const Fixture& f, std::size_t cap) {
  require_kind(f, FixtureKind::Group);
  return PermGroup::from_generators(parse_generators(f.payload.at("generators").get<std::string>()), cap);
}

DegreeMultiset fixture_degrees(const Fixture& f) {
  require_kind(f, FixtureKind::DegreeSet);
  const auto values = f.payload.at("degrees").get<std::vector<std::uint64_t>>();
  return degree_multiset_from_list(values);
}

SimpleGraph fixture_graph(const Fixture& f) {
  switch (f.kind) {
    case FixtureKind::RawGraph: return parse_graph_string(f.payload.at("graph").get<std::string>());
    case FixtureKind::DegreeSet: return build_graph(fixture_degrees(f)).to_simple_graph();
    case FixtureKind::Group: return build_graph(character_degrees(fixture_group(f))).to_simple_graph();
  }
  return SimpleGraph();
}

SimpleGraph expected_graph(const Fixture& f) {
  return parse_graph_string(f.expected.at("graph").get<std::string>());
}

SolvableMode fixture_mode(const Fixture& f) {
  return parse_solvable_mode(f.expected.value("analysis_mode", f.kind == FixtureKind::Group ? "auto" : "unknown"));
}

AnalysisReport analyze_fixture(const Fixture& f, std::optional<SolvableMode> mode) {
  const SolvableMode m = mode.value_or(fixture_mode(f));
  AnalysisReport report;
  switch (f.kind) {
    case FixtureKind::Group: report = analyze_group(fixture_group(f), m); break;
    case FixtureKind::DegreeSet: report = analyze_degrees(fixture_degrees(f), m); break;
    case FixtureKind::RawGraph: report = analyze_graph(fixture_graph(f), m); break;
  }
  report.input["fixture"] = f.name;
  return report;
}

Json to_json(const Fixture& f) {
  Json out;
  out["name"] = f.name;
  out["kind"] = to_string(f.kind);
  out["description"] = f.description;
  out["payload"] = f.payload;
  out["expected"] = f.expected;
  return out;
}

}  // namespace chargraph
