#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "csv.hpp"
#include "fracburgers/bounds.hpp"
#include "fracburgers/errors.hpp"
#include "fracburgers/fode.hpp"
#include "fracburgers/frac_ops.hpp"
#include "fracburgers/impulse.hpp"
#include "fracburgers/pde.hpp"

namespace fracburgers::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// Bad input discovered after parsing (unreadable file, unknown --initial, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& flag) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) throw CLI::ValidationError(flag, "not a number: " + text);
  return value;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_double(item, flag));
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_number(values[i]);
  }
  return s;
}

// Numeric flags go through std::from_chars so that every printed value parses
// back to the same double.
CLI::Option* number(CLI::App* app, const std::string& name, double& target, const std::string& help) {
  return app->add_option_function<std::string>(
      name, [&target, name](const std::string& s) { target = parse_double(s, name); }, help)
      ->type_name("NUM");
}

CLI::Option* optional_number(CLI::App* app, const std::string& name, std::optional<double>& target,
                             const std::string& help) {
  return app->add_option_function<std::string>(
      name, [&target, name](const std::string& s) { target = parse_double(s, name); }, help)
      ->type_name("NUM");
}

CLI::Option* list(CLI::App* app, const std::string& name, std::vector<double>& target, const std::string& help) {
  return app->add_option_function<std::string>(
      name, [&target, name](const std::string& s) { target = parse_list(s, name); }, help)
      ->type_name("LIST");
}

struct Output {
  std::string dir = ".";
  std::string prefix;

  fs::path file(const std::string& suffix) const { return fs::path(dir) / (prefix + suffix); }
};

void add_output(CLI::App* app, Output& o) {
  app->add_option("--out-dir", o.dir, "directory for data files and the manifest")->capture_default_str();
  app->add_option("--prefix", o.prefix, "file name stem (default: subcommand name)");
}

std::ofstream open_for_write(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  return f;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json time_grid_json(const TimeGrid& g) {
  return {{"origin", g.origin}, {"step", g.step}, {"count", g.count}, {"last", g.last()}};
}

struct RunRecord {
  std::string subcommand;
  json parameters = json::object();
  json grids = json::object();
  json outputs = json::array();
  std::string status = "ok";
};

json manifest(const RunRecord& r, double seconds) {
  return {{"subcommand", r.subcommand},
          {"version", FRACBURGERS_VERSION},
          {"parameters", r.parameters},
          {"grids", r.grids},
          {"outputs", r.outputs},
          {"status", r.status},
          {"duration_seconds", seconds},
          {"created_utc", utc_timestamp()}};
}

void write_manifest(const RunRecord& r, const Output& o, double seconds) {
  auto f = open_for_write(o.file(".manifest.json"));
  f << manifest(r, seconds).dump(2) << '\n';
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  double alpha = 0.0;
  std::optional<double> delta;
};

json lower_bound_json(FractionalOrder order, double delta) {
  const auto c = bounds::lower_bound_constants(order, delta);
  return {{"delta", delta}, {"T", c.T},       {"kappa", c.kappa}, {"eta", c.eta},
          {"d", c.d},       {"a", c.lbc_a},   {"b", c.lbc_b},     {"c_delta", c.c_delta}};
}

json run_bounds(const BoundsArgs& a, RunRecord& rec) {
  const FractionalOrder order(a.alpha);
  rec.parameters["alpha"] = a.alpha;
  json report = {{"alpha", a.alpha},
                 {"upper_bound_b", bounds::upper_bound_b(order)},
                 {"limit_upper_bound", bounds::limit_upper_bound()}};
  if (a.delta) {
    rec.parameters["delta"] = *a.delta;
    if (order.is_classical()) throw std::invalid_argument("the lower bound needs alpha < 1");
    report["lower_bound"] = lower_bound_json(order, *a.delta);
  }
  return report;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  double alpha = 0.0;
  double h = 0.0;
  double t_max = 0.0;
  std::optional<double> cap;
  double v0 = 1.0;
  double threshold = 1e6;
  int sweeps = 1;
  Output output;
};

void run_solve(const SolveArgs& a, RunRecord& rec) {
  const FractionalOrder order(a.alpha);
  fode::SolverConfig cfg;
  cfg.step = a.h;
  cfg.horizon = a.t_max;
  cfg.escape_threshold = a.threshold;
  cfg.corrector_sweeps = a.sweeps;
  const auto tr = a.cap ? fode::solve_capped(*a.cap, a.v0, order, cfg)
                        : fode::solve(fode::Nonlinearity::square(), a.v0, order, cfg);

  rec.parameters = {{"alpha", a.alpha}, {"h", a.h}, {"t-max", a.t_max}, {"v0", a.v0},
                    {"threshold", a.threshold}, {"sweeps", a.sweeps}};
  if (a.cap) rec.parameters["cap"] = *a.cap;
  rec.grids["time"] = time_grid_json(tr.samples.grid);
  rec.status = tr.escaped() ? "escaped" : "completed";

  const auto path = a.output.file(".csv");
  auto f = open_for_write(path);
  CsvWriter csv(f, {"t", "v"});
  for (std::size_t j = 0; j < tr.samples.size(); ++j) csv.row({tr.samples.grid.node(j), tr.samples[j]});
  rec.outputs.push_back(path.string());
}

// ---------------------------------------------------------------- blowup

struct BlowupArgs {
  double alpha = 0.0;
  double threshold = 1e6;
  int refinements = 3;
  double finest_step = 1e-4;
  double horizon = 2.0;
  double delta = 0.5;
};

json run_blowup(const BlowupArgs& a, RunRecord& rec) {
  const FractionalOrder order(a.alpha);
  rec.parameters = {{"alpha", a.alpha},         {"threshold", a.threshold},
                    {"refinements", a.refinements}, {"finest-step", a.finest_step},
                    {"horizon", a.horizon},     {"delta", a.delta}};
  fode::LadderConfig seed;
  seed.max_threshold = a.threshold;
  seed.halvings = a.refinements;
  seed.finest_step = a.finest_step;
  seed.horizon = a.horizon;

  json sandwich = {{"delta", a.delta},
                   {"lower_bound_T", nullptr},
                   {"upper_bound_b", bounds::upper_bound_b(order)}};
  if (!order.is_classical()) {
    try {
      sandwich["lower_bound_T"] = bounds::lower_bound_T(order, a.delta);
    } catch (const ConsistencyError&) {
      throw;
    } catch (const NumericalError& e) {
      sandwich["lower_bound_note"] = e.what();
    }
  }

  const auto est = fode::estimate_blowup(order, seed);
  json trace = json::array();
  for (const auto& e : est.refinement_trace) {
    trace.push_back({{"step", e.step}, {"threshold", e.threshold}, {"escape_time", e.escape_time}});
  }
  return {{"alpha", a.alpha},
          {"status", "escaped"},
          {"t_lo", est.t_lo},
          {"t_hi", est.t_hi},
          {"extrapolated", est.extrapolated},
          {"sandwich", sandwich},
          {"refinement_trace", trace}};
}

// ---------------------------------------------------------------- impulse

struct ImpulseArgs {
  std::vector<double> alphas = impulse::default_alphas();
  std::vector<double> times = impulse::default_train().times();
  double h = 0.01;
  double t_max = 6.0;
  Output output;
};

void run_impulse(const ImpulseArgs& a, RunRecord& rec) {
  rec.parameters = {{"alphas", join(a.alphas)}, {"times", join(a.times)}, {"h", a.h}, {"t-max", a.t_max}};
  const impulse::ImpulseTrain train(a.times);
  const auto table = impulse::impulse_dataset(train, a.alphas, TimeGrid::covering(a.h, a.t_max));
  rec.grids["time"] = {{"first", table.times(0)},
                       {"step", a.h},
                       {"count", table.times.size() - 1},
                       {"last", table.times(table.times.size() - 1)}};

  std::vector<std::string> header{"t"};
  header.insert(header.end(), table.labels.begin(), table.labels.end());
  const auto path = a.output.file(".csv");
  auto f = open_for_write(path);
  CsvWriter csv(f, header);
  std::vector<double> row(header.size());
  for (Eigen::Index i = 0; i < table.times.size(); ++i) {
    row[0] = table.times(i);
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) row[static_cast<std::size_t>(c) + 1] = table.values(i, c);
    csv.row(row);
  }
  rec.outputs.push_back(path.string());
}

// ---------------------------------------------------------------- caputo

struct CaputoArgs {
  double alpha = 0.0;
  std::string input;
  Output output;
};

void run_caputo(const CaputoArgs& a, RunRecord& rec) {
  const FractionalOrder order(a.alpha);
  rec.parameters = {{"alpha", a.alpha}, {"input", a.input}};
  std::map<std::string, std::vector<double>> cols;
  try {
    cols = read_csv_columns(a.input);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!cols.count("t") || !cols.count("f")) throw UsageError(a.input + " needs columns t and f");
  const auto& t = cols["t"];
  const auto& values = cols["f"];
  const TimeGrid grid = TimeGrid::from_nodes(t);
  const SampledFunction f(grid, Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
  const SampledFunction d = order.is_classical() ? classical_derivative(f) : caputo_left(f, order);
  rec.grids["time"] = time_grid_json(grid);

  const auto path = a.output.file(".csv");
  auto out = open_for_write(path);
  CsvWriter csv(out, {"t", "f", "caputo"});
  for (std::size_t j = 0; j < f.size(); ++j) csv.row({t[j], f[j], d[j]});
  rec.outputs.push_back(path.string());
}

// ---------------------------------------------------------------- pde

struct PdeArgs {
  std::string form;
  double alpha = 0.0;
  std::size_t cells = 0;
  double h = 0.0;
  double t_max = 0.0;
  std::string bc;
  std::string initial = "minus-x";
  double x_min = -1.0;
  double x_max = 1.0;
  double threshold = 1e6;
  Output output;
};

void run_pde(const PdeArgs& a, RunRecord& rec) {
  const FractionalOrder order(a.alpha);
  rec.parameters = {{"form", a.form},   {"alpha", a.alpha}, {"cells", a.cells},     {"h", a.h},
                    {"t-max", a.t_max}, {"bc", a.bc},       {"initial", a.initial}, {"x-min", a.x_min},
                    {"x-max", a.x_max}, {"threshold", a.threshold}};
  const bool rho_form = a.form == "rho";
  const pde::SpatialGrid grid(a.x_min, a.x_max, a.cells);
  const Eigen::VectorXd x = grid.centers();
  const pde::MarketParams params(order);

  // minus-x and market-critical name the same datum: u0 = -x, rho0 = (1 - x)/2.
  Eigen::VectorXd init;
  std::optional<double> constant;
  if (a.initial == "minus-x" || a.initial == "market-critical") {
    init = rho_form ? Eigen::VectorXd((0.5 * (1.0 - x.array())).matrix()) : Eigen::VectorXd(-x);
  } else if (a.initial.rfind("constant:", 0) == 0) {
    try {
      constant = parse_double(a.initial.substr(9), "--initial");
    } catch (const CLI::ValidationError&) {
      throw UsageError("--initial constant:<c> needs a number, got " + a.initial);
    }
    init = Eigen::VectorXd::Constant(x.size(), *constant);
  } else {
    throw UsageError("unknown --initial '" + a.initial + "' (minus-x, market-critical, constant:<c>)");
  }

  pde::BoundaryRule bc = pde::BoundaryRule::periodic();
  if (a.bc == "dirichlet") {
    if (constant) {
      const double c = *constant;
      bc = pde::BoundaryRule::dirichlet([c](double, double) { return c; });
    } else {
      fode::SolverConfig cfg;
      cfg.step = a.h / 16.0;
      cfg.horizon = a.t_max + 2.0 * a.h;
      cfg.corrector_sweeps = 3;
      auto v = std::make_shared<const fode::Trajectory>(
          fode::solve(fode::Nonlinearity::square(), 1.0, order, cfg));
      rec.grids["boundary_reference_time"] = time_grid_json(v->samples.grid);
      bc = rho_form ? pde::separable_boundary_rho(v) : pde::separable_boundary_u(v);
    }
  }

  pde::PdeConfig cfg;
  cfg.step = a.h;
  cfg.horizon = a.t_max;
  cfg.escape_threshold = a.threshold;
  const auto history = rho_form ? pde::solve_rho(init, order, grid, cfg, bc, params)
                                : pde::solve_u(init, order, grid, cfg, bc);
  rec.status = history.escaped() ? "escaped" : "completed";
  rec.grids["time"] = time_grid_json(history.time);
  rec.grids["space"] = {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"cells", grid.cells}, {"dx", grid.dx()}};

  const auto path = a.output.file(".csv");
  auto f = open_for_write(path);
  CsvWriter csv(f, {"t", "x", rho_form ? "rho" : "u"});
  for (std::size_t n = 0; n <= history.steps(); ++n) {
    const double t = history.time.node(n);
    for (std::size_t i = 0; i < grid.cells; ++i) {
      csv.row({t, x(static_cast<Eigen::Index>(i)),
               history.slices(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i))});
    }
  }
  rec.outputs.push_back(path.string());
}

// ---------------------------------------------------------------- replay

std::vector<std::string> replay_args(const json& m, const std::string& out_dir, const std::string& prefix) {
  if (!m.contains("subcommand") || !m.contains("parameters")) {
    throw UsageError("manifest lacks subcommand or parameters");
  }
  const std::string sub = m["subcommand"].get<std::string>();
  std::vector<std::string> args{sub};
  for (const auto& [key, value] : m["parameters"].items()) {
    args.push_back("--" + key);
    if (value.is_string()) {
      args.push_back(value.get<std::string>());
    } else if (value.is_number_integer() || value.is_number_unsigned()) {
      args.push_back(value.dump());
    } else if (value.is_number()) {
      args.push_back(format_number(value.get<double>()));
    } else {
      throw UsageError("unsupported manifest parameter " + key);
    }
  }
  if (sub != "bounds" && sub != "blowup") {
    args.insert(args.end(), {"--out-dir", out_dir, "--prefix", prefix});
  }
  return args;
}

std::string stem_of(const fs::path& manifest_path) {
  std::string name = manifest_path.filename().string();
  const std::string suffix = ".manifest.json";
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return name.substr(0, name.size() - suffix.size());
  }
  return manifest_path.stem().string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-fractional Burgers blow-up toolkit"};
  app.set_version_flag("--version", std::string(FRACBURGERS_VERSION));
  app.require_subcommand(1);
  // `--h` is the time-step flag, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "analytic blow-up time bounds as JSON");
  number(bounds_cmd, "--alpha", bounds_args.alpha, "order in (0, 1]")->required();
  optional_number(bounds_cmd, "--delta", bounds_args.delta, "lower-bound parameter > 0");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "fractional ODE trajectory (t, v) as CSV");
  number(solve_cmd, "--alpha", solve_args.alpha, "order in (0, 1]")->required();
  number(solve_cmd, "--h", solve_args.h, "time step")->required();
  number(solve_cmd, "--t-max", solve_args.t_max, "horizon")->required();
  optional_number(solve_cmd, "--cap", solve_args.cap, "cap M >= 4 for min(v^2, M^2)");
  number(solve_cmd, "--v0", solve_args.v0, "initial value (default 1)");
  number(solve_cmd, "--threshold", solve_args.threshold, "escape threshold (default 1e6)");
  solve_cmd->add_option("--sweeps", solve_args.sweeps, "corrector sweeps")->capture_default_str();
  add_output(solve_cmd, solve_args.output);

  BlowupArgs blowup_args;
  auto* blowup_cmd = app.add_subcommand("blowup", "bracket the blow-up time of D^a v = v^2, v(0) = 1");
  number(blowup_cmd, "--alpha", blowup_args.alpha, "order in (0, 1]")->required();
  number(blowup_cmd, "--threshold", blowup_args.threshold, "largest escape threshold (default 1e6)");
  blowup_cmd->add_option("--refinements", blowup_args.refinements, "step halvings (>= 3)")->capture_default_str();
  number(blowup_cmd, "--finest-step", blowup_args.finest_step, "finest ladder step (default 1e-4)");
  number(blowup_cmd, "--horizon", blowup_args.horizon, "give up after this time (default 2)");
  number(blowup_cmd, "--delta", blowup_args.delta, "lower-bound parameter of the reported sandwich (default 0.5)");

  ImpulseArgs impulse_args;
  auto* impulse_cmd = app.add_subcommand("impulse", "impulse-train solutions, one column per order, as CSV");
  list(impulse_cmd, "--alphas", impulse_args.alphas, "comma-separated orders; 1 gives the step count");
  list(impulse_cmd, "--times", impulse_args.times, "comma-separated impulse times");
  number(impulse_cmd, "--h", impulse_args.h, "time step (default 0.01)");
  number(impulse_cmd, "--t-max", impulse_args.t_max, "horizon (default 6)");
  add_output(impulse_cmd, impulse_args.output);

  CaputoArgs caputo_args;
  auto* caputo_cmd = app.add_subcommand("caputo", "L1 Caputo derivative of sampled data (CSV columns t, f)");
  number(caputo_cmd, "--alpha", caputo_args.alpha, "order in (0, 1]")->required();
  caputo_cmd->add_option("--input", caputo_args.input, "CSV file with columns t, f")->required();
  add_output(caputo_cmd, caputo_args.output);

  PdeArgs pde_args;
  auto* pde_cmd = app.add_subcommand("pde", "time-fractional Burgers / market density field as long CSV");
  pde_cmd->add_option("--form", pde_args.form, "u or rho")->required()->check(CLI::IsMember({"u", "rho"}));
  number(pde_cmd, "--alpha", pde_args.alpha, "order in (0, 1]")->required();
  pde_cmd->add_option("--cells", pde_args.cells, "spatial cells (>= 8)")->required();
  number(pde_cmd, "--h", pde_args.h, "time step")->required();
  number(pde_cmd, "--t-max", pde_args.t_max, "horizon")->required();
  pde_cmd->add_option("--bc", pde_args.bc, "dirichlet or periodic")
      ->required()
      ->check(CLI::IsMember({"dirichlet", "periodic"}));
  pde_cmd->add_option("--initial", pde_args.initial, "minus-x, market-critical or constant:<c>")
      ->capture_default_str();
  number(pde_cmd, "--x-min", pde_args.x_min, "left end (default -1)");
  number(pde_cmd, "--x-max", pde_args.x_max, "right end (default 1)");
  number(pde_cmd, "--threshold", pde_args.threshold, "escape threshold (default 1e6)");
  add_output(pde_cmd, pde_args.output);

  std::string manifest_path;
  Output replay_output;
  auto* replay_cmd = app.add_subcommand("replay", "re-run from a manifest's recorded parameters");
  replay_cmd->add_option("--manifest", manifest_path, "manifest JSON")->required();
  add_output(replay_cmd, replay_output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForVersion&) {
    out << FRACBURGERS_VERSION << '\n';
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  RunRecord rec;
  rec.subcommand = chosen->get_name();
  for (Output* o : {&solve_args.output, &impulse_args.output, &caputo_args.output, &pde_args.output}) {
    if (o->prefix.empty()) o->prefix = rec.subcommand;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    if (chosen == replay_cmd) {
      std::ifstream f(manifest_path);
      if (!f) throw UsageError("cannot open " + manifest_path);
      json m;
      try {
        m = json::parse(f);
      } catch (const json::exception& e) {
        throw UsageError(manifest_path + ": " + e.what());
      }
      const std::string prefix = replay_output.prefix.empty() ? stem_of(manifest_path) : replay_output.prefix;
      return run(replay_args(m, replay_output.dir, prefix), out, err);
    }
    if (chosen == bounds_cmd) {
      json report = run_bounds(bounds_args, rec);
      report["manifest"] = manifest(rec, elapsed());
      out << report.dump(2) << '\n';
    } else if (chosen == blowup_cmd) {
      rec.parameters = json::object();
      try {
        json report = run_blowup(blowup_args, rec);
        report["manifest"] = manifest(rec, elapsed());
        out << report.dump(2) << '\n';
      } catch (const NoBlowupDetected& e) {
        rec.status = "no blow-up detected below horizon";
        json report = {{"alpha", blowup_args.alpha},
                       {"status", rec.status},
                       {"horizon", e.horizon()},
                       {"manifest", manifest(rec, elapsed())}};
        out << report.dump(2) << '\n';
        err << "no blow-up detected below horizon " << format_number(e.horizon()) << '\n';
        return ExitCode::no_blowup;
      }
    } else if (chosen == solve_cmd) {
      run_solve(solve_args, rec);
      write_manifest(rec, solve_args.output, elapsed());
    } else if (chosen == impulse_cmd) {
      run_impulse(impulse_args, rec);
      write_manifest(rec, impulse_args.output, elapsed());
    } else if (chosen == caputo_cmd) {
      run_caputo(caputo_args, rec);
      write_manifest(rec, caputo_args.output, elapsed());
    } else if (chosen == pde_cmd) {
      run_pde(pde_args, rec);
      write_manifest(rec, pde_args.output, elapsed());
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  }
  return ExitCode::ok;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace fracburgers::cli
