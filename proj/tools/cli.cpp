#include "cli.hpp"

#include "f4/render.hpp"
#include "f4/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <optional>
#include <string>

namespace f4::cli {

namespace {

enum class Format { Text, Json, Off };

struct Options {
  std::string label_text;
  Format format = Format::Text;
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> criterion;
  bool verbose = false;
  std::string system = "F4";
  std::string object = "cell";
  std::string group_name = "WF4";
};

// Rejected or unusable input label; exit status 2.
struct LabelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"json", Format::Json}, {"off", Format::Off}};

const std::map<std::string, SystemName> kSystems = {
    {"F4", SystemName::F4}, {"B4", SystemName::B4}, {"B3", SystemName::B3R}};

const std::map<std::string, GroupName> kGroups = {
    {"WF4", GroupName::WF4},         {"AutF4", GroupName::AutF4},
    {"WB4", GroupName::WB4},         {"WB3", GroupName::WB3R},
    {"WB3xC2", GroupName::WB3R_C2},  {"WB3LxC2", GroupName::WB3L_C2}};

OrbitLabel parse_label(const std::string& text, std::size_t rank) {
  OrbitLabel label;
  try {
    label = OrbitLabel::parse(text);
  } catch (const std::exception& e) {
    throw LabelError("cannot parse label \"" + text + "\": " + e.what());
  }
  if (label.rank() != rank) {
    throw LabelError("label " + label.str() + " has " + std::to_string(label.rank()) +
                     " entries, expected " + std::to_string(rank));
  }
  if (label.is_zero()) throw LabelError("label " + label.str() + " is zero: the orbit is a point");
  if (!label.is_dominant()) throw LabelError("label " + label.str() + " is not dominant");
  return label;
}

void require(Format f, std::initializer_list<Format> allowed, const std::string& command) {
  for (Format a : allowed) {
    if (a == f) return;
  }
  throw std::invalid_argument("format not available for " + command);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json report_json(const std::vector<Report>& reports, std::uint64_t seed) {
  nlohmann::json out = {{"seed", seed}, {"passed", true}, {"reports", nlohmann::json::array()}};
  for (const Report& r : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : r.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out["reports"].push_back(
        {{"number", r.number}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}});
    if (!r.passed()) out["passed"] = false;
  }
  return out;
}

struct Result {
  std::string text;
  int status = 0;
};

Result verify(const Options& o) {
  require(o.format, {Format::Text, Format::Json}, "verify");
  std::vector<Report> reports;
  if (o.criterion) {
    reports.push_back(run_report(*o.criterion, o.seed));
  } else {
    reports = run_all(o.seed);
  }
  bool ok = true;
  for (const Report& r : reports) ok &= r.passed();
  if (o.format == Format::Json) return {dump(report_json(reports, o.seed)), ok ? 0 : 1};
  std::string text;
  for (const Report& r : reports) text += render(r, o.verbose);
  text += ok ? "all checks passed\n" : "some checks FAILED\n";
  return {text, ok ? 0 : 1};
}

std::string off_of_cell(const OrbitLabel& label) { return to_off(mesh_of(dual_cell_local(label))); }

Result run_command(const std::string& command, const Options& o) {
  if (command == "verify") return verify(o);
  const SystemName sys = kSystems.at(o.system);
  const std::size_t rank = command == "orbit" ? root_system(sys).rank() : 4;
  const OrbitLabel label = parse_label(o.label_text, rank);
  const bool json = o.format == Format::Json;
  try {
    if (command == "orbit") {
      require(o.format, {Format::Text, Format::Json}, command);
      const Orbit orbit = generate_orbit(sys, label);
      if (json) return {dump(to_json(orbit))};
      std::string text = label.str() + "_" + to_string(sys) + ": " +
                         std::to_string(orbit.vertices.size()) + " vertices\n";
      for (const Quat& v : orbit.vertices) text += "  " + pretty(v) + "\n";
      return {text};
    }
    if (command == "fvector") {
      require(o.format, {Format::Text, Format::Json}, command);
      const PolytopeComplex pc = f_vector(SystemName::F4, label);
      return {json ? dump(to_json(pc)) : render(pc)};
    }
    if (command == "branch-b4") {
      require(o.format, {Format::Text, Format::Json}, command);
      const B4Branching b = branch_b4(label);
      return {json ? dump(to_json(b)) : render(b) + "\n"};
    }
    if (command == "branch-b3a1") {
      require(o.format, {Format::Text, Format::Json}, command);
      const B3A1Branching b = branch_b3a1(label);
      return {json ? dump(to_json(b)) : render(b) + "\n"};
    }
    if (command == "project") {
      require(o.format, {Format::Text, Format::Json}, command);
      const auto slices = project_3d(label);
      return {json ? dump(to_json(slices)) : render(slices)};
    }
    if (command == "dual") {
      if (o.format == Format::Off) return {off_of_cell(label)};
      const DualPolytope d = dual_polytope(label);
      const DualCell cell = dual_cell_local(label);
      if (json) {
        nlohmann::json j = to_json(d);
        j["cell"] = to_json(cell);
        return {dump(j)};
      }
      return {render(d) + render(cell)};
    }
    if (command == "export") {
      if (o.object == "cell") {
        if (o.format == Format::Off) return {off_of_cell(label)};
        require(o.format, {Format::Json}, "export cell");
        return {dump(to_json(dual_cell_local(label)))};
      }
      require(o.format, {Format::Json}, "export " + o.object);
      if (o.object == "dual") {
        nlohmann::json j = to_json(dual_polytope(label));
        j["cell"] = to_json(dual_cell_local(label));
        return {dump(j)};
      }
      if (o.object == "fvector") return {dump(to_json(f_vector(SystemName::F4, label)))};
      if (o.object == "branchings") {
        return {dump({{"b4", to_json(branch_b4(label))},
                      {"b3a1", to_json(branch_b3a1(label))},
                      {"projection", to_json(project_3d(label))}})};
      }
      if (o.object == "group") return {dump(to_json(group(kGroups.at(o.group_name))))};
    }
  } catch (const std::invalid_argument& e) {
    throw LabelError(label.str() + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw LabelError(label.str() + ": " + e.what());
  }
  throw std::logic_error("unhandled command " + command);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (const char* threads = std::getenv("F4_THREADS")) {
    const long n = std::strtol(threads, nullptr, 10);
    if (n > 0) set_worker_threads(static_cast<unsigned>(n));
  }

  CLI::App app{"W(F4) polytopes with quaternionic coordinates"};
  app.require_subcommand(1);
  Options o;

  std::optional<Format> format;
  auto with_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or off")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
  };
  auto with_label = [&](CLI::App* sub) {
    sub->add_option("label", o.label_text, "Dynkin label such as 1,0,0,1 or 1,sqrt2,0,1+sqrt2")
        ->required();
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification battery");
  verify_cmd->add_option("--seed", o.seed, "seed for randomized property checks");
  verify_cmd->add_option("--criterion", o.criterion, "run one report: 0 invariants, 1-10, 11 errata")
      ->check(CLI::Range(0, kErrata));
  verify_cmd->add_flag("-v,--verbose", o.verbose, "list passing checks too");

  CLI::App* orbit_cmd = app.add_subcommand("orbit", "vertices of a Weyl group orbit");
  orbit_cmd->add_option("--system", o.system, "F4, B4 or B3")
      ->check(CLI::IsMember({"F4", "B4", "B3"}));
  CLI::App* fvector_cmd = app.add_subcommand("fvector", "f-vector and face inventories");
  CLI::App* b4_cmd = app.add_subcommand("branch-b4", "decomposition under W(B4)");
  CLI::App* b3_cmd = app.add_subcommand("branch-b3a1", "decomposition under W(B3) x W(A1)");
  CLI::App* project_cmd = app.add_subcommand("project", "3D slices along the real axis");
  CLI::App* dual_cmd = app.add_subcommand("dual", "dual polytope and its cell");
  CLI::App* export_cmd = app.add_subcommand("export", "write a mesh or a JSON dump");
  export_cmd->add_option("--object", o.object, "cell, dual, fvector, branchings or group")
      ->check(CLI::IsMember({"cell", "dual", "fvector", "branchings", "group"}));
  export_cmd->add_option("--group", o.group_name, "group for --object group")
      ->check(CLI::IsMember({"WF4", "AutF4", "WB4", "WB3", "WB3xC2", "WB3LxC2"}));

  for (CLI::App* sub :
       {verify_cmd, orbit_cmd, fvector_cmd, b4_cmd, b3_cmd, project_cmd, dual_cmd, export_cmd})
    with_common(sub);
  for (CLI::App* sub : {orbit_cmd, fvector_cmd, b4_cmd, b3_cmd, project_cmd, dual_cmd}) with_label(sub);
  export_cmd->add_option("label", o.label_text, "Dynkin label (unused for --object group)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    if (status != 0) err << app.help();
    return status;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  o.format = format.value_or(command == "export" ? Format::Off : Format::Text);
  if (command == "export" && o.object == "group") {
    o.label_text = o.label_text.empty() ? "1,0,0,0" : o.label_text;
  } else if (command == "export" && o.label_text.empty()) {
    err << "error: export needs a label\n" << export_cmd->help();
    return 2;
  }

  try {
    const Result r = run_command(command, o);
    if (o.output.empty()) {
      out << r.text;
    } else {
      write_file(o.output, r.text);
    }
    return r.status;
  } catch (const LabelError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace f4::cli
