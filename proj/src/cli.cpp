#include "chargraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chargraph/analysis.hpp"
#include "chargraph/catalog.hpp"
#include "chargraph/errors.hpp"
#include "chargraph/permutation.hpp"
#include "chargraph/spectrum.hpp"

namespace chargraph {

namespace fs = std::filesystem;

namespace {

struct Inputs {
  std::string group;
  std::string degrees;
  std::string graph;
  std::string graph_json;
  std::string fixture;
};

struct Common {
  Inputs in;
  std::string solvable;
  std::string format = "text";
  std::size_t max_group_order = kDefaultGroupCap;
  std::string out_path;
};

// A flag value naming an existing file is replaced by the file contents.
std::string read_source(const std::string& value) {
  std::error_code ec;
  if (value.empty() || value.size() > 4096 || !fs::is_regular_file(value, ec)) return value;
  std::ifstream f(value);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

bool looks_like_json_object(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

PermGroup load_group(const std::string& value, std::size_t cap) {
  const std::string text = read_source(value);
  auto gens = looks_like_json_object(text) ? parse_generators_json(text) : parse_generators(text);
  return PermGroup::from_generators(gens, cap);
}

int count_sources(const Inputs& in) {
  return static_cast<int>(!in.group.empty()) + static_cast<int>(!in.degrees.empty()) +
         static_cast<int>(!in.graph.empty()) + static_cast<int>(!in.graph_json.empty()) +
         static_cast<int>(!in.fixture.empty());
}

void require_one_source(const Inputs& in) {
  if (count_sources(in) != 1) {
    throw Error(ErrorKind::ParseError,
                "exactly one of --group, --degrees, --graph, --graph-json, --fixture is required");
  }
}

SimpleGraph load_graph(const Inputs& in) {
  if (!in.graph.empty()) return parse_graph_string(read_source(in.graph));
  return parse_graph_json(read_source(in.graph_json));
}

std::string mode_or(const std::string& given, const char* fallback) { return given.empty() ? fallback : given; }

AnalysisReport analyze_inputs(const Inputs& in, const std::string& solvable, std::size_t cap) {
  require_one_source(in);
  if (!in.fixture.empty()) {
    const Fixture f = load_fixture(in.fixture);
    std::optional<SolvableMode> mode;
    if (!solvable.empty()) mode = parse_solvable_mode(solvable);
    if (f.kind == FixtureKind::Group) {
      AnalysisReport r = analyze_group(fixture_group(f, cap), mode.value_or(fixture_mode(f)));
      r.input["fixture"] = f.name;
      return r;
    }
    return analyze_fixture(f, mode);
  }
  if (!in.group.empty()) {
    return analyze_group(load_group(in.group, cap), parse_solvable_mode(mode_or(solvable, "auto")));
  }
  const SolvableMode mode = parse_solvable_mode(mode_or(solvable, "unknown"));
  if (!in.degrees.empty()) return analyze_degrees(parse_degree_list(read_source(in.degrees)), mode);
  return analyze_graph(load_graph(in), mode);
}

std::string render(const AnalysisReport& r, const std::string& format) {
  if (format == "json") return r.to_json().dump(2) + "\n";
  if (format == "dot") return r.to_dot();
  return r.to_text();
}

void check_format(const std::string& format, bool allow_dot) {
  if (format == "text" || format == "json" || (allow_dot && format == "dot")) return;
  throw Error(ErrorKind::ParseError, "unsupported --format '" + format + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  f << text;
}

int exit_code_for(const Error& e) { return e.is_resource_cap() ? kExitCapExceeded : kExitInputError; }

void add_inputs(CLI::App* app, Inputs& in, bool group, bool degrees, bool graph, bool fixture) {
  if (group) app->add_option("--group", in.group, "generators in cycle notation, JSON, or a file");
  if (degrees) app->add_option("--degrees", in.degrees, "degree list \"1,15,16,17\", JSON array, or a file");
  if (graph) {
    app->add_option("--graph", in.graph, "edge list \"3-5;2;17\" or a file");
    app->add_option("--graph-json", in.graph_json, "{\"vertices\": [...], \"edges\": [...]} or a file");
  }
  if (fixture) app->add_option("--fixture", in.fixture, "named fixture from the catalog");
}

void add_common(CLI::App* app, Common& c, bool solvable) {
  if (solvable) app->add_option("--solvable", c.solvable, "true | false | unknown | auto");
  app->add_option("--format", c.format, "text | json | dot");
  app->add_option("--max-group-order", c.max_group_order, "element cap for group closure");
  app->add_option("--out", c.out_path, "write output to this file");
}

int cmd_analyze(const Common& c, std::ostream& out) {
  check_format(c.format, true);
  const AnalysisReport r = analyze_inputs(c.in, c.solvable, c.max_group_order);
  emit(render(r, c.format), c.out_path, out);
  return r.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_screen(const Common& c, std::ostream& out) {
  check_format(c.format, true);
  require_one_source(c.in);
  SimpleGraph g;
  if (!c.in.fixture.empty()) {
    g = fixture_graph(load_fixture(c.in.fixture));
  } else if (!c.in.degrees.empty()) {
    g = build_graph(parse_degree_list(read_source(c.in.degrees))).to_simple_graph();
  } else {
    g = load_graph(c.in);
  }
  const AnalysisReport r = screen_solvable_feasibility(g);
  emit(render(r, c.format), c.out_path, out);
  return r.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_degrees(const Common& c, std::ostream& out) {
  check_format(c.format, false);
  if (count_sources(c.in) != 1) throw Error(ErrorKind::ParseError, "exactly one of --group, --fixture is required");
  PermGroup g = c.in.fixture.empty() ? load_group(c.in.group, c.max_group_order)
                                     : fixture_group(load_fixture(c.in.fixture), c.max_group_order);
  const DegreeMultiset cd = character_degrees(g);
  const auto primes = rho(cd);
  std::ostringstream os;
  if (c.format == "json") {
    Json j;
    j["order"] = g.order();
    j["classes"] = g.conjugacy_classes().size();
    j["degrees"] = cd.expanded();
    Json mult = Json::array();
    for (auto [d, m] : cd.entries()) mult.push_back({d, m});
    j["multiset"] = std::move(mult);
    j["rho"] = primes;
    os << j.dump(2) << '\n';
  } else {
    os << "order: " << g.order() << '\n';
    os << "classes: " << g.conjugacy_classes().size() << '\n';
    os << "cd: " << cd.to_string() << '\n';
    os << "rho:";
    for (auto p : primes) os << ' ' << p;
    os << '\n';
  }
  emit(os.str(), c.out_path, out);
  return kExitOk;
}

int cmd_spectrum(const Common& c, std::ostream& out) {
  check_format(c.format, false);
  require_one_source(c.in);
  SimpleGraph g;
  if (!c.in.fixture.empty()) {
    g = fixture_graph(load_fixture(c.in.fixture));
  } else if (!c.in.group.empty()) {
    g = build_graph(character_degrees(load_group(c.in.group, c.max_group_order))).to_simple_graph();
  } else if (!c.in.degrees.empty()) {
    g = build_graph(parse_degree_list(read_source(c.in.degrees))).to_simple_graph();
  } else {
    g = load_graph(c.in);
  }
  const IntPolynomial p = char_poly(g);
  const SpectrumSummary s = spectrum_summary(p, g.n());
  std::ostringstream os;
  if (c.format == "json") {
    Json j;
    Json coeffs = Json::array();
    for (const auto& x : p.coefficients()) coeffs.push_back(x.str());
    j["n"] = g.n();
    j["char_poly"] = p.to_string();
    j["coefficients"] = std::move(coeffs);
    j["distinct_count"] = s.distinct_count;
    Json eig = Json::array();
    for (auto [v, m] : s.integer_eigenvalues) eig.push_back({v, m});
    j["integer_eigenvalues"] = std::move(eig);
    j["irrational_multiplicity"] = s.irrational_multiplicity;
    j["has_irrational_part"] = s.has_irrational_part;
    os << j.dump(2) << '\n';
  } else {
    os << "char_poly: " << p.to_string() << '\n';
    os << "distinct_eigenvalues: " << s.distinct_count << '\n';
    os << "integer_eigenvalues:";
    for (auto [v, m] : s.integer_eigenvalues) os << ' ' << v << "^" << m;
    os << '\n';
    os << "irrational_multiplicity: " << s.irrational_multiplicity << '\n';
  }
  emit(os.str(), c.out_path, out);
  return kExitOk;
}

int cmd_catalog(const Common& c, const std::string& name, std::ostream& out) {
  check_format(c.format, false);
  std::ostringstream os;
  if (name.empty()) {
    if (c.format == "json") {
      os << Json(list_fixtures()).dump(2) << '\n';
    } else {
      for (const auto& n : list_fixtures()) {
        const Fixture f = load_fixture(n);
        os << std::left << std::setw(20) << n << std::setw(12) << to_string(f.kind) << f.description << '\n';
      }
    }
  } else {
    os << to_json(load_fixture(name)).dump(2) << '\n';
  }
  emit(os.str(), c.out_path, out);
  return kExitOk;
}

struct BatchResult {
  int code = kExitOk;
  Json json;
  std::string text;
};

BatchResult run_batch_file(const fs::path& path, const Common& c) {
  BatchResult r;
  r.json["file"] = path.filename().string();
  try {
    std::ifstream f(path);
    const Json job = Json::parse(f);
    Inputs in;
    auto text_of = [&](const char* key) {
      if (!job.contains(key)) return std::string();
      return job[key].is_string() ? job[key].get<std::string>() : job[key].dump();
    };
    in.group = text_of("group");
    in.degrees = text_of("degrees");
    in.graph = text_of("graph");
    in.graph_json = text_of("graph_json");
    in.fixture = text_of("fixture");
    const std::string solvable = job.value("solvable", c.solvable);
    const AnalysisReport report = analyze_inputs(in, solvable, c.max_group_order);
    r.code = report.ok() ? kExitOk : kExitCheckFailed;
    r.json["report"] = report.to_json();
    r.text = report.to_text();
  } catch (const Error& e) {
    r.code = exit_code_for(e);
    r.json["error"] = e.what();
    r.text = std::string("error: ") + e.what() + "\n";
  } catch (const Json::exception& e) {
    r.code = kExitInputError;
    r.json["error"] = e.what();
    r.text = std::string("error: ") + e.what() + "\n";
  }
  r.json["exit_code"] = r.code;
  return r;
}

int cmd_batch(const Common& c, const std::string& dir, std::ostream& out) {
  check_format(c.format, false);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::ParseError, "'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<BatchResult>> pending;
  pending.reserve(files.size());
  for (const auto& path : files) {
    pending.push_back(std::async(std::launch::async, run_batch_file, path, std::cref(c)));
  }
  int code = kExitOk;
  Json all = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    BatchResult r = pending[i].get();
    code = std::max(code, r.code);
    if (c.format == "json") {
      all.push_back(std::move(r.json));
    } else {
      os << "== " << files[i].filename().string() << " (exit " << r.code << ")\n" << r.text;
    }
  }
  if (c.format == "json") os << all.dump(2) << '\n';
  emit(os.str(), c.out_path, out);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character degree graphs: degrees, graphs and structural checks"};
  app.require_subcommand(1);

  Common analyze, screen, degrees, spectrum, catalog, batch;
  std::string catalog_name;
  std::string batch_dir;

  auto* a = app.add_subcommand("analyze", "full pipeline: group -> degrees -> graph -> checks");
  add_inputs(a, analyze.in, true, true, true, true);
  add_common(a, analyze, true);

  auto* s = app.add_subcommand("screen", "necessary conditions for a solvable character graph");
  add_inputs(s, screen.in, false, true, true, true);
  add_common(s, screen, false);

  auto* d = app.add_subcommand("degrees", "character degrees of a permutation group");
  add_inputs(d, degrees.in, true, false, false, true);
  add_common(d, degrees, false);

  auto* sp = app.add_subcommand("spectrum", "characteristic polynomial and eigenvalue summary");
  add_inputs(sp, spectrum.in, true, true, true, true);
  add_common(sp, spectrum, false);

  auto* cat = app.add_subcommand("catalog", "list fixtures, or print one");
  cat->add_option("name", catalog_name, "fixture name");
  add_common(cat, catalog, false);

  auto* b = app.add_subcommand("batch", "analyze every *.json job in a directory");
  b->add_option("dir", batch_dir, "directory of job files")->required();
  add_common(b, batch, true);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, out);
    if (s->parsed()) return cmd_screen(screen, out);
    if (d->parsed()) return cmd_degrees(degrees, out);
    if (sp->parsed()) return cmd_spectrum(spectrum, out);
    if (cat->parsed()) return cmd_catalog(catalog, catalog_name, out);
    if (b->parsed()) return cmd_batch(batch, batch_dir, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace chargraph
