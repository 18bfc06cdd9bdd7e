#include "centropy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "centropy/classes.hpp"
#include "centropy/entropy.hpp"
#include "centropy/error.hpp"
#include "centropy/io.hpp"
#include "centropy/mc.hpp"
#include "centropy/orbit.hpp"
#include "centropy/witness.hpp"

namespace centropy::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kCsvDigits = 12;

struct Globals {
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::string out_path;
  std::string format;  // empty: the command's natural format
};

std::string num(double x) { return io::format_double(x, kCsvDigits); }
const char* flag(bool b) { return b ? "true" : "false"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return kExitIo;
    case ErrorCode::TargetInsideClass:
    case ErrorCode::DegenerateSpectrum: return kExitDomain;
    case ErrorCode::NoConvergence: return kExitInternal;
    default: return kExitInvalid;
  }
}

void write_output(const Globals& g, const std::string& body, std::ostream& out) {
  if (g.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + g.out_path);
  f << body;
  f.flush();
  if (!f) throw Error(ErrorCode::Io, "write failed for " + g.out_path);
}

bool want_csv(const Globals& g, bool csv_by_default) {
  return g.format.empty() ? csv_by_default : g.format == "csv";
}

// Flat JSON object -> header line + value line.
std::string json_row_csv(const ordered_json& j) {
  std::string head;
  std::string row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += it.key();
    const auto& v = it.value();
    if (v.is_boolean()) {
      row += flag(v.get<bool>());
    } else if (v.is_number_float()) {
      row += num(v.get<double>());
    } else if (v.is_string()) {
      row += v.get<std::string>();
    } else {
      row += v.dump();
    }
  }
  return head + "\n" + row + "\n";
}

ordered_json matrix_value(const Mat4& m) { return ordered_json::parse(io::matrix_json(m)); }

ordered_json entropy_section(const DensityMatrix& rho) {
  ordered_json j = io::to_json(entropy_report(rho));
  j["capacity_marginal_A"] = dense_coding_capacity(rho, Subsystem::A);
  j["capacity_marginal_B"] = dense_coding_capacity(rho, Subsystem::B);
  return j;
}

std::string cmd_classify(const Globals& g, const std::string& path) {
  const DensityMatrix rho = io::read_state_file(path);
  ordered_json j = io::to_json(classify(rho, g.tol));
  j["capacity_marginal_A"] = dense_coding_capacity(rho, Subsystem::A);
  j["capacity_marginal_B"] = dense_coding_capacity(rho, Subsystem::B);
  return want_csv(g, false) ? json_row_csv(j) : j.dump(2) + "\n";
}

std::string cmd_scan_werner(const Globals& g, int steps) {
  std::ostringstream os;
  os << "p,S,cond_A,M,is_acvenn,is_as,is_al,is_ppt_separable\n";
  for (int k = 0; k <= steps; ++k) {
    const double p = static_cast<double>(k) / steps;
    const DensityMatrix rho = werner(p);
    const EntropyReport e = entropy_report(rho);
    os << num(p) << ',' << num(e.S_total) << ',' << num(e.cond_given_A) << ',' << num(chsh_M(rho)) << ','
       << flag(is_acvenn(rho, g.tol)) << ',' << flag(is_abs_separable(rho.spectrum(), g.tol)) << ','
       << flag(is_al_werner(p, g.tol)) << ',' << flag(is_ppt_separable(rho)) << '\n';
  }
  return os.str();
}

// The closed form takes logs of the eigenvalues, so it is only compared where
// every eigenvalue is clear of zero.
constexpr double kClosedFormMargin = 1e-9;

std::string cmd_scan_bell_diagonal(const Globals& g, int grid) {
  std::ostringstream os;
  os << "c1,c2,c3,inside_tetrahedron,S,is_acvenn,closed_form_agrees\n";
  auto axis = [grid](int k) { return -1.0 + 2.0 * k / grid; };
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j)
      for (int k = 0; k <= grid; ++k) {
        const BellDiagonalParams params{axis(i), axis(j), axis(k)};
        const bool inside = params.inside_tetrahedron(1e-12);
        os << num(params.c1) << ',' << num(params.c2) << ',' << num(params.c3) << ',' << flag(inside) << ',';
        if (!inside) {
          os << ",,na\n";
          continue;
        }
        const DensityMatrix rho = bell_diagonal(params);
        const bool member = is_acvenn(rho, g.tol);
        os << num(von_neumann(rho)) << ',' << flag(member) << ',';
        const auto ev = params.eigenvalues();
        if (*std::min_element(ev.begin(), ev.end()) > kClosedFormMargin) {
          os << flag(bd_acvenn_closed_form(params, g.tol) == member) << '\n';
        } else {
          os << "na\n";
        }
      }
  return os.str();
}

std::string cmd_orbit(const Globals& g, const std::string& path) {
  const OrbitReport r = min_conditional_entropy(io::read_state_file(path), g.tol);
  if (want_csv(g, false)) {
    return "S_total,min_cond_entropy,negativity_reachable\n" + num(r.S_total) + "," + num(r.min_cond_entropy) + "," +
           flag(r.negativity_reachable) + "\n";
  }
  return io::orbit_report_json(r) + "\n";
}

std::string cmd_witness_build(const Globals& g, const std::string& path) {
  return io::witness_json(build_witness(io::read_state_file(path), g.tol)) + "\n";
}

std::string cmd_witness_eval(const std::string& wpath, const std::string& spath) {
  const WitnessOperator w = io::read_witness_file(wpath);
  return io::format_double(eval_witness(w, io::read_state_file(spath)), 17) + "\n";
}

std::string cmd_mc(const Globals& g, const std::string& objective_name, std::uint64_t samples, unsigned workers,
                   const std::string& dump_path) {
  const auto objective = objective_from_string(objective_name);
  if (!objective) throw Error(ErrorCode::Parse, "unknown objective " + objective_name);

  std::ofstream dump;
  std::function<void(const SampleRecord&)> on_sample;
  if (!dump_path.empty()) {
    dump.open(dump_path, std::ios::binary);
    if (!dump) throw Error(ErrorCode::Io, "cannot write " + dump_path);
    dump << "index,distance,S,is_acvenn,is_as\n";
    on_sample = [&dump](const SampleRecord& r) {
      dump << r.index << ',' << num(r.distance) << ',' << num(r.entropy) << ',' << flag(r.is_acvenn) << ','
           << flag(r.is_abs_separable) << '\n';
    };
  }

  const SampleStats stats = estimate_extreme(*objective, samples, g.seed, workers, on_sample);
  if (dump.is_open()) {
    dump.flush();
    if (!dump) throw Error(ErrorCode::Io, "write failed for " + dump_path);
  }

  if (want_csv(g, false)) {
    const auto& v = stats.extreme_state_spectrum.values();
    std::ostringstream os;
    os << "objective,n_samples,n_accepted,extreme_value,l1,l2,l3,l4,extreme_index,seed\n"
       << to_string(stats.objective) << ',' << stats.n_samples << ',' << stats.n_accepted << ','
       << num(stats.extreme_value) << ',' << num(v[0]) << ',' << num(v[1]) << ',' << num(v[2]) << ',' << num(v[3])
       << ',' << stats.extreme_index << ',' << stats.seed << '\n';
    return os.str();
  }
  return io::to_json(stats).dump(2) + "\n";
}

std::string cmd_demo_dense_coding(double a, double b) {
  const DensityMatrix before = dense_coding_example_state(a, b);
  const Unitary u = bell_rotation_unitary();
  const DensityMatrix after = apply(u, before);

  const double q = std::sqrt(1.0 - 4.0 * a + 4.0 * a * a + 4.0 * b * b);
  const double q_prime = std::sqrt(1.0 - 2.0 * a + a * a + 2.0 * b * b);
  const double cap_before = dense_coding_capacity(before, Subsystem::A);
  const double cap_after = dense_coding_capacity(after, Subsystem::A);

  ordered_json j;
  j["a"] = a;
  j["b"] = b;
  j["q"] = q;
  j["q_prime"] = q_prime;
  j["advantage_expected"] = q > q_prime;
  j["spectrum"] = before.spectrum().values();
  j["before"] = entropy_section(before);
  j["unitary"] = matrix_value(u.matrix());
  j["after"] = entropy_section(after);
  j["state_after"] = matrix_value(after.matrix());
  j["capacity_gain"] = cap_after - cap_before;
  j["made_useful"] = cap_before <= 1.0 && cap_after > 1.0;
  return j.dump(2) + "\n";
}

std::string cmd_demo_state_merging(const Globals& g) {
  const DensityMatrix initial = merging_example_state();
  const Unitary u = bell_rotation_unitary().adjoint();
  const DensityMatrix final_state = apply(u, initial);
  const double cost_before = merging_cost(initial, Subsystem::A);
  const double cost_after = merging_cost(final_state, Subsystem::A);

  ordered_json j;
  j["initial_state"] = matrix_value(initial.matrix());
  j["initial"] = io::to_json(entropy_report(initial));
  j["initial"]["merging_regime"] = to_string(merging_regime(cost_before, g.tol));
  j["unitary"] = matrix_value(u.matrix());
  j["final_state"] = matrix_value(final_state.matrix());
  j["final"] = io::to_json(entropy_report(final_state));
  j["final"]["merging_regime"] = to_string(merging_regime(cost_after, g.tol));
  j["entropy_invariance_error"] = std::abs(von_neumann(final_state) - von_neumann(initial));
  j["orbit_minimum"] = min_conditional_entropy(initial, g.tol).min_cond_entropy;
  return j.dump(2) + "\n";
}

struct StateArgs {
  double p = 0.5;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double a = 0.5, b = 0.4;
  std::vector<double> spectrum;
};

std::string cmd_state(const Globals& g, const std::string& kind, const StateArgs& s) {
  if (kind == "werner") return io::state_json(werner(s.p).matrix()) + "\n";
  if (kind == "bell") return io::state_json(pure_state(bell_basis()[0]).matrix()) + "\n";
  if (kind == "maximally-mixed") return io::state_json(maximally_mixed().matrix()) + "\n";
  if (kind == "merging-example") return io::state_json(merging_example_state().matrix()) + "\n";
  if (kind == "dense-coding") return io::state_json(dense_coding_example_state(s.a, s.b).matrix()) + "\n";
  if (kind == "bell-diagonal") return io::state_json(bell_diagonal({s.c1, s.c2, s.c3}).matrix()) + "\n";
  if (kind == "diagonal") {
    if (s.spectrum.size() != 4) throw Error(ErrorCode::Parse, "--spectrum needs four values");
    const Mat4 m = Mat4::diagonal({s.spectrum[0], s.spectrum[1], s.spectrum[2], s.spectrum[3]});
    return io::state_json(DensityMatrix::from_matrix(m).matrix()) + "\n";
  }
  if (kind == "random-hs") {
    Philox4x64 rng(g.seed, 0);
    return io::state_json(sample_hs_state(rng).matrix()) + "\n";
  }
  throw Error(ErrorCode::Parse, "unknown state kind " + kind);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conditional-entropy toolkit for two-qubit states", "centropy"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Class-membership tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::string file;
  std::string file2;

  auto* classify_cmd = app.add_subcommand("classify", "Membership report for a state file");
  classify_cmd->add_option("file", file, "State JSON")->required();

  auto* scan = app.add_subcommand("scan", "Parameter sweeps as CSV");
  scan->require_subcommand(1);
  int steps = 1000;
  auto* scan_werner = scan->add_subcommand("werner", "Werner family over p = k/steps, k = 0..steps");
  scan_werner->add_option("--steps", steps, "Number of grid intervals")->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  int grid = 20;
  auto* scan_bd = scan->add_subcommand("bell-diagonal", "Bell-diagonal cube over c = -1 + 2k/grid");
  scan_bd->add_option("--grid", grid, "Grid intervals per axis")->check(CLI::Range(2, 2000))->capture_default_str();

  auto* orbit_cmd = app.add_subcommand("orbit", "Minimum conditional entropy over the unitary orbit");
  orbit_cmd->add_option("file", file, "State JSON")->required();

  auto* witness = app.add_subcommand("witness", "Build or evaluate a witness operator");
  witness->require_subcommand(1);
  auto* witness_build = witness->add_subcommand("build", "Witness separating a target state from S >= 1");
  witness_build->add_option("file", file, "Target state JSON")->required();
  auto* witness_eval = witness->add_subcommand("eval", "Print Tr(W rho)");
  witness_eval->add_option("witness", file, "Witness JSON")->required();
  witness_eval->add_option("state", file2, "State JSON")->required();

  auto* mc = app.add_subcommand("mc", "Monte Carlo extremes over state classes");
  std::string objective;
  std::uint64_t samples = 100000;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string dump_path;
  mc->add_option("--objective", objective, "Quantity to extremize")
      ->required()
      ->check(CLI::IsMember({"max-distance-in-acvenn", "min-distance-outside-acvenn", "min-entropy-in-as"}));
  mc->add_option("--samples", samples, "Accepted class members to visit")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40))
      ->capture_default_str();
  mc->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 4096u));
  mc->add_option("--dump", dump_path, "Per-sample CSV");

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->require_subcommand(1);
  double a = 0.5;
  double b = 0.4;
  auto* demo_dc = demo->add_subcommand("dense-coding", "Global unitary that unlocks dense coding");
  demo_dc->add_option("--a", a)->capture_default_str();
  demo_dc->add_option("--b", b)->capture_default_str();
  auto* demo_sm = demo->add_subcommand("state-merging", "Global unitary that makes merging profitable");

  auto* state = app.add_subcommand("state", "Emit a named state as JSON");
  std::string kind;
  StateArgs sargs;
  state->add_option("kind", kind, "Named state")
      ->required()
      ->check(CLI::IsMember(
          {"werner", "bell", "maximally-mixed", "merging-example", "dense-coding", "bell-diagonal", "diagonal",
           "random-hs"}));
  state->add_option("--p", sargs.p, "Werner mixing parameter");
  state->add_option("--c1", sargs.c1);
  state->add_option("--c2", sargs.c2);
  state->add_option("--c3", sargs.c3);
  state->add_option("--a", sargs.a);
  state->add_option("--b", sargs.b);
  state->add_option("--spectrum", sargs.spectrum, "Four diagonal entries")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    std::string body;
    if (*classify_cmd) {
      body = cmd_classify(g, file);
    } else if (*scan_werner) {
      body = cmd_scan_werner(g, steps);
    } else if (*scan_bd) {
      body = cmd_scan_bell_diagonal(g, grid);
    } else if (*orbit_cmd) {
      body = cmd_orbit(g, file);
    } else if (*witness_build) {
      body = cmd_witness_build(g, file);
    } else if (*witness_eval) {
      body = cmd_witness_eval(file, file2);
    } else if (*mc) {
      body = cmd_mc(g, objective, samples, workers, dump_path);
    } else if (*demo_dc) {
      body = cmd_demo_dense_coding(a, b);
    } else if (*demo_sm) {
      body = cmd_demo_state_merging(g);
    } else if (*state) {
      body = cmd_state(g, kind, sargs);
    }
    write_output(g, body, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("centropy");
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace centropy::cli
