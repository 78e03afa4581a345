// cubeplan — provably optimal motion planning on CAT(0) cube complexes.
//
// Subcommands:
//   enumerate  list or count the states of an arm
//   pip        export the partial-order encoding of an arm's state space
//   check      certify a state space (or a description file) as CAT(0)
//   geodesic   plan an optimal motion between two arm states
//   oracle     brute-force BFS distance, for cross-checking plans
//   render     draw one arm state as SVG or ASCII
//
// Exit codes: 0 success/certified, 1 refuted or unreadable input, 2 usage,
// 3 resource guard. CUBEPLAN_GUARD overrides the enumeration ceiling.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "cubeplan/arm.hpp"
#include "cubeplan/io.hpp"
#include "cubeplan/render.hpp"

namespace {

using namespace cubeplan;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;  // also: unreadable or invalid input files
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

// Command-line values that survive parsing but make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t guard_from_env() {
  const char* raw = std::getenv("CUBEPLAN_GUARD");
  if (!raw || !*raw) return kDefaultGuard;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("CUBEPLAN_GUARD must be a positive integer, got '" +
                     text + "'");
  errno = 0;
  const unsigned long long value = std::strtoull(text.c_str(), nullptr, 10);
  if (errno != 0 || value == 0)
    throw UsageError("CUBEPLAN_GUARD must be a positive integer, got '" +
                     text + "'");
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ParseError("cannot write '" + path + "'");
}

// Valid arm words are command-line arguments here, so a bad one is a usage
// error, reported with the library's diagnostic.
void require_state(const ArmSpec& spec, const std::string& word,
                   const char* flag) {
  try {
    if (is_valid_state(spec, word)) return;
    throw UsageError(std::string(flag) + ": '" + word +
                     "' collides with itself or leaves the tunnel");
  } catch (const InvalidState& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

RenderFormat parse_format(const std::string& name) {
  return name == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg;
}

int run_enumerate(const ArmSpec& spec, bool count_only, std::uint64_t guard) {
  if (count_only) {
    std::cout << count_states(spec, guard) << "\n";
    return kExitOk;
  }
  for (const std::string& word : enumerate_states(spec, guard))
    std::cout << word << "\n";
  return kExitOk;
}

int run_pip(const ArmSpec& spec, const std::string& root,
            const std::string& out_path, const std::string& dot_path,
            std::uint64_t guard) {
  if (!root.empty()) require_state(spec, root, "--root");
  ArmPip arm = root.empty() ? arm_pip(spec, guard) : arm_pip(spec, root, guard);
  const std::string text = pip_to_json(arm.pip);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  if (!dot_path.empty()) write_file(dot_path, pip_to_dot(arm.pip));
  return kExitOk;
}

int check_complex(const CubeComplex& x, std::size_t root,
                  const std::string& dot_path, std::uint64_t guard) {
  if (!dot_path.empty()) write_file(dot_path, complex_to_dot(x));
  Cat0Result result = is_cat0(x, root, guard);
  if (!result.certified()) {
    std::cout << "refuted: " << result.refutation->witness << "\n";
    return kExitRefuted;
  }
  std::size_t dimension = x.vertex_count() > 1 ? 1 : 0;
  for (const CubeRec& cube : x.cubes())
    dimension = std::max(dimension, cube.labels.size());
  std::cout << "certified CAT(0)\n"
            << "vertices: " << x.vertex_count() << "\n"
            << "hyperplanes: " << result.certificate->pip.size() << "\n"
            << "max cube dimension: " << dimension << "\n"
            << "Euler characteristic: " << x.euler_characteristic() << "\n";
  return kExitOk;
}

// A file handed to `check --pip` may hold either a partial-order
// description or an explicit complex; the required top-level field tells
// them apart. `check --complex` skips the detection.
int run_check_file(const std::string& path, bool allow_description,
                   const std::string& root_name, const std::string& dot_path,
                   std::uint64_t guard) {
  const std::string text = read_file(path);
  std::optional<CubeComplex> x;
  if (allow_description) {
    try {
      Pip pip = pip_from_json(text);
      x.emplace(from_pip(pip, guard).complex);
    } catch (const ParseError& e) {
      if (std::string(e.what()) != "missing required field \"elements\"")
        throw;
    }
  }
  if (!x) x.emplace(complex_from_json(text));
  std::size_t root = x->root().value_or(0);
  if (!root_name.empty()) {
    try {
      root = x->vertex_index(root_name);
    } catch (const InvalidComplex&) {
      throw UsageError("--root: no vertex named '" + root_name + "'");
    }
  }
  return check_complex(*x, root, dot_path, guard);
}

int run_check_arm(const ArmSpec& spec, const std::string& root_word,
                  const std::string& dot_path, std::uint64_t guard) {
  if (!root_word.empty()) require_state(spec, root_word, "--root");
  BuiltArm built = build_complex(spec, guard);
  const std::string root = root_word.empty() ? straight_word(spec) : root_word;
  return check_complex(built.complex, built.complex.vertex_index(root),
                       dot_path, guard);
}

int run_geodesic(const ArmSpec& spec, const std::string& from,
                 const std::string& to, const std::string& metric,
                 const std::string& frames_dir, const std::string& format,
                 std::uint64_t guard) {
  require_state(spec, from, "--from");
  require_state(spec, to, "--to");
  ArmPip arm = arm_pip(spec, guard);

  std::unordered_map<Bitset, std::string, BitsetHash> word_of;
  for (std::size_t v = 0; v < arm.states.size(); ++v)
    word_of.emplace(arm.state_ideals[v], arm.states[v]);

  const Bitset& source = arm.state_ideals[arm.complex.vertex_index(from)];
  const Bitset& target = arm.state_ideals[arm.complex.vertex_index(to)];
  GeodesicPlan plan = metric == "l1" ? l1_geodesic(arm.pip, source, target)
                                     : linf_geodesic(arm.pip, source, target);

  std::cout << plan_to_json(plan, arm.pip, [&](const Bitset& ideal) {
    return word_of.at(ideal);
  });

  if (!frames_dir.empty()) {
    const RenderFormat fmt = parse_format(format);
    std::filesystem::create_directories(frames_dir);
    for (std::size_t k = 0; k < plan.vertex_trace.size(); ++k) {
      char stem[32];
      std::snprintf(stem, sizeof stem, "%04zu", k);
      const std::string file = frames_dir + "/" + stem + "." +
                               std::string(render_extension(fmt));
      write_file(file,
                 render_frame(spec, word_of.at(plan.vertex_trace[k]), fmt));
    }
  }
  return kExitOk;
}

int run_oracle(const ArmSpec& spec, const std::string& from,
               const std::string& to, const std::string& metric,
               std::uint64_t guard) {
  require_state(spec, from, "--from");
  require_state(spec, to, "--to");
  BuiltArm built = build_complex(spec, guard);
  DistanceOracle oracle(built.complex);
  std::cout << oracle.distance(built.complex.vertex_index(from),
                               built.complex.vertex_index(to),
                               metric == "l1" ? Metric::L1 : Metric::LInf)
            << "\n";
  return kExitOk;
}

int run_render(const ArmSpec& spec, const std::string& state,
               const std::string& format, const std::string& out_path) {
  require_state(spec, state, "--state");
  const std::string text = render_frame(spec, state, parse_format(format));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"motion planning for a pinned arm via CAT(0) cube complexes"};
  app.require_subcommand(1);
  const CLI::IsMember format_check({"svg", "ascii"});
  const CLI::IsMember metric_check({"l1", "linf"});

  ArmSpec spec;
  auto add_spec = [&](CLI::App* cmd, bool required) {
    const CLI::Range positive(std::uint64_t{1},
                              std::numeric_limits<std::uint64_t>::max());
    auto* h = cmd->add_option("--height,-m", spec.height,
                              "tunnel height (lattice rows 0..height)")
                  ->check(positive);
    auto* l = cmd->add_option("--length,-n", spec.length,
                              "number of unit links")
                  ->check(positive);
    if (required) {
      h->required();
      l->required();
    }
  };

  bool count_only = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list the valid states of the arm, one per line");
  add_spec(enumerate, true);
  enumerate->add_flag("--count-only", count_only, "print only the count");

  std::string root, out_path, dot_path;
  CLI::App* pip = app.add_subcommand(
      "pip", "export the state space's partial-order description as JSON");
  add_spec(pip, true);
  pip->add_option("--root", root, "state to use as the planning origin");
  pip->add_option("--out", out_path, "write JSON here instead of stdout");
  pip->add_option("--dot", dot_path, "also write a Graphviz order diagram");

  std::string check_pip_file, check_complex_file;
  CLI::App* check = app.add_subcommand(
      "check", "certify a state space as CAT(0), or refute it");
  add_spec(check, false);
  check->add_option("--pip", check_pip_file,
                    "certify a JSON file (description or complex)");
  check->add_option("--complex", check_complex_file,
                    "certify an explicit complex JSON file");
  check->add_option("--root", root, "origin vertex (state word or name)");
  check->add_option("--dot", dot_path, "write the coloured 1-skeleton");

  std::string from, to, metric = "l1", frames_dir, format = "svg";
  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "plan an optimal motion between two states");
  add_spec(geodesic, true);
  geodesic->add_option("--from", from, "start state")->required();
  geodesic->add_option("--to", to, "goal state")->required();
  geodesic->add_option("--metric", metric, "l1 (moves) or linf (time steps)")
      ->check(metric_check);
  geodesic->add_option("--frames", frames_dir,
                       "write one rendered frame per plan step here");
  geodesic->add_option("--format", format, "frame format")
      ->check(format_check);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "breadth-first reference distance between two states");
  add_spec(oracle, true);
  oracle->add_option("--from", from, "start state")->required();
  oracle->add_option("--to", to, "goal state")->required();
  oracle->add_option("--metric", metric, "l1 or linf")->check(metric_check);

  std::string state;
  CLI::App* render = app.add_subcommand("render", "draw one state");
  add_spec(render, true);
  render->add_option("--state", state, "state word to draw")->required();
  render->add_option("--format", format, "svg or ascii")->check(format_check);
  render->add_option("--out", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::uint64_t guard = guard_from_env();
  if (*enumerate) return run_enumerate(spec, count_only, guard);
  if (*pip) return run_pip(spec, root, out_path, dot_path, guard);
  if (*check) {
    const bool have_spec = check->count("--height") && check->count("--length");
    const bool have_file = !check_pip_file.empty() || !check_complex_file.empty();
    if (have_spec == have_file ||
        (!check_pip_file.empty() && !check_complex_file.empty()))
      throw UsageError(
          "check needs exactly one of --height/--length, --pip, --complex");
    if (have_file)
      return run_check_file(
          check_pip_file.empty() ? check_complex_file : check_pip_file,
          !check_pip_file.empty(), root, dot_path, guard);
    return run_check_arm(spec, root, dot_path, guard);
  }
  if (*geodesic)
    return run_geodesic(spec, from, to, metric, frames_dir, format, guard);
  if (*oracle) return run_oracle(spec, from, to, metric, guard);
  if (*render) return run_render(spec, state, format, out_path);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArmSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
}
