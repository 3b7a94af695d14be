// Command-line front end: pure walks, master-equation runs, trajectory
// sampling, (channel,T,p) sweeps and the small-p analyses, emitted as CSV
// or JSON.  Exit codes: 0 success, 1 I/O, 2 usage/validation, 3 regime.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/analysis.hpp"
#include "qwalk/density_matrix.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"
#include "qwalk/pure_state.hpp"
#include "qwalk/sweep.hpp"
#include "qwalk/theory.hpp"
#include "qwalk/trajectories.hpp"
#include "qwalk/version.hpp"

namespace {

using nlohmann::json;
using namespace qwalk;

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("bad number in list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list: '" + s + "'");
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_double_list(s)) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
      throw std::invalid_argument("expected integer list, got '" + s + "'");
    out.push_back(i);
  }
  return out;
}

// "min:max:n" -> n log-spaced values, endpoints included
std::vector<double> parse_log_grid(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
      !std::getline(ss, c, ':'))
    throw std::invalid_argument("log grid must be min:max:count");
  const double lo = std::stod(a);
  const double hi = std::stod(b);
  const int n = std::stoi(c);
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw std::invalid_argument("log grid needs 0 < min < max and count >= 2");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = std::exp(std::log(lo) +
                      (std::log(hi) - std::log(lo)) * i / (n - 1));
  }
  return out;
}

std::vector<ChannelKind> parse_channel_list(const std::string& s) {
  if (s == "all")
    return {ChannelKind::CoinOnly, ChannelKind::PositionOnly, ChannelKind::Both};
  std::vector<ChannelKind> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(io::parse_channel(item));
  if (out.empty()) throw std::invalid_argument("empty channel list");
  return out;
}

struct TableOutputs {
  const Distribution* dist = nullptr;
  std::vector<analysis::MomentsRecord> moments;
  const Eigen::VectorXd* standard_errors = nullptr;
};

void write_tables(const std::string& out, const std::string& format,
                  const TableOutputs& tables, json metadata) {
  if (format == "csv") {
    if (tables.dist)
      io::write_file(out + ".dist.csv", io::distribution_csv(*tables.dist));
    io::write_file(out + ".moments.csv", io::moments_csv(tables.moments));
  } else {
    json j;
    j["metadata"] = std::move(metadata);
    if (tables.dist) j["distribution"] = io::distribution_json(*tables.dist);
    j["moments"] = io::moments_json(tables.moments);
    if (tables.standard_errors) {
      std::vector<double> se(tables.standard_errors->data(),
                             tables.standard_errors->data() +
                                 tables.standard_errors->size());
      j["standard_errors"] = se;
    }
    io::write_file(out + ".json", j.dump(2) + "\n");
  }
}

struct WalkArgs {
  int T = 0;
  std::string coin_init = "symmetric";
  std::string out;
  std::string format = "csv";
};

struct MasterArgs : WalkArgs {
  double p = 0.0;
  std::string channel = "both";
};

struct TrajArgs : MasterArgs {
  std::uint64_t runs = 10000;
  std::uint64_t seed = 1;
  int jobs = 0;  // 0 = hardware concurrency
};

struct SweepArgs {
  std::string T_list;
  std::string p_list;
  std::string p_log;
  std::string channels = "both";
  std::string coin_init = "symmetric";
  std::string engine = "master";
  std::uint64_t runs = 10000;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::string format = "csv";
};

struct AnalyzeArgs {
  std::string mode;
  int T = 200;
  std::string T_list = "100,200,300";
  std::string p_grid;
  std::string channel = "both";
  int jobs = 1;
  std::string out;
};

void do_walk(const WalkArgs& a) {
  WalkConfig cfg;
  cfg.T = a.T;
  cfg.coin_init = io::parse_coin_init(a.coin_init);
  const PureState psi = evolve_pure(cfg);
  const Distribution dist = distribution(psi);
  const analysis::MomentsRecord rec = analysis::moments(dist);

  json meta = io::make_metadata();
  meta["command"] = "walk";
  meta["T"] = a.T;
  meta["coin_init"] = a.coin_init;
  TableOutputs tables;
  tables.dist = &dist;
  tables.moments = {rec};
  write_tables(a.out, a.format, tables, std::move(meta));
}

void do_master(const MasterArgs& a) {
  WalkConfig cfg;
  cfg.T = a.T;
  cfg.p = a.p;
  cfg.channel = io::parse_channel(a.channel);
  cfg.coin_init = io::parse_coin_init(a.coin_init);
  const DensityMatrix rho = evolve_master(cfg);
  const Distribution dist = diagonal_distribution(rho);
  analysis::MomentsRecord rec = analysis::moments(dist);
  rec.p = a.p;
  rec.channel = cfg.channel;

  json meta = io::make_metadata();
  meta["command"] = "master";
  meta["T"] = a.T;
  meta["p"] = a.p;
  meta["channel"] = a.channel;
  meta["coin_init"] = a.coin_init;
  TableOutputs tables;
  tables.dist = &dist;
  tables.moments = {rec};
  write_tables(a.out, a.format, tables, std::move(meta));
}

void do_traj(const TrajArgs& a) {
  TrajectoryConfig tc;
  tc.walk.T = a.T;
  tc.walk.p = a.p;
  tc.walk.channel = io::parse_channel(a.channel);
  tc.walk.coin_init = io::parse_coin_init(a.coin_init);
  tc.n_runs = a.runs;
  tc.seed = a.seed;
  const EstimatedDistribution est = estimate_distribution(tc, a.jobs);
  analysis::MomentsRecord rec = analysis::moments(est.probs);
  rec.p = a.p;
  rec.channel = tc.walk.channel;

  json meta = io::make_metadata();
  meta["command"] = "traj";
  meta["T"] = a.T;
  meta["p"] = a.p;
  meta["channel"] = a.channel;
  meta["coin_init"] = a.coin_init;
  meta["runs"] = a.runs;
  meta["seed"] = a.seed;
  TableOutputs tables;
  tables.dist = &est.probs;
  tables.moments = {rec};
  tables.standard_errors = &est.standard_errors;
  write_tables(a.out, a.format, tables, std::move(meta));
}

void do_sweep(const SweepArgs& a) {
  SweepSpec spec;
  spec.T_values = parse_int_list(a.T_list);
  if (!a.p_log.empty()) {
    spec.p_values = parse_log_grid(a.p_log);
    if (!a.p_list.empty())
      throw std::invalid_argument("--p and --p-log are mutually exclusive");
  } else if (!a.p_list.empty()) {
    spec.p_values = parse_double_list(a.p_list);
  } else {
    throw std::invalid_argument("sweep needs --p or --p-log");
  }
  spec.channels = parse_channel_list(a.channels);
  spec.coin_init = io::parse_coin_init(a.coin_init);
  if (a.engine == "master") {
    spec.engine = SweepSpec::Engine::master;
  } else if (a.engine == "traj") {
    spec.engine = SweepSpec::Engine::trajectory;
  } else {
    throw std::invalid_argument("unknown engine '" + a.engine + "'");
  }
  spec.n_runs = a.runs;
  spec.seed = a.seed;
  spec.jobs = a.jobs;

  const auto rows = run_sweep(spec);

  if (a.format == "csv") {
    io::write_file(a.out, io::moments_csv(rows));
  } else {
    json meta = io::make_metadata();
    meta["command"] = "sweep";
    meta["engine"] = a.engine;
    meta["seed"] = a.seed;
    meta["grid"] = {{"T", spec.T_values},
                    {"p", spec.p_values},
                    {"channels", a.channels}};
    if (spec.engine == SweepSpec::Engine::trajectory) meta["runs"] = a.runs;
    json j;
    j["metadata"] = std::move(meta);
    j["moments"] = io::moments_json(rows);
    io::write_file(a.out, j.dump(2) + "\n");
  }
}

void do_analyze(const AnalyzeArgs& a) {
  json meta = io::make_metadata();
  meta["command"] = "analyze";
  json inputs;
  json result;

  if (a.mode == "slope") {
    const ChannelKind channel = io::parse_channel(a.channel);
    std::vector<double> grid;
    if (!a.p_grid.empty()) {
      grid = parse_double_list(a.p_grid);
    } else {
      grid = {0.0, 0.05 / a.T, 0.1 / a.T};
    }
    const analysis::SlopeEstimate est =
        analysis::scaled_small_p_slope(a.T, channel, grid,
                                       symmetric_coin_state(), a.jobs);
    inputs = {{"mode", a.mode},
              {"T", a.T},
              {"channel", a.channel},
              {"p_grid", grid}};
    result = {{"scaled_slope", est.scaled_slope}, {"method", est.method}};
  } else if (a.mode == "pcoef") {
    const ChannelKind channel = io::parse_channel(a.channel);
    const std::vector<int> T_list = parse_int_list(a.T_list);
    const double c2 =
        analysis::p_coefficient_fit(T_list, channel, symmetric_coin_state(),
                                    a.jobs);
    std::vector<double> levels(analysis::kPcoefLevels.begin(),
                               analysis::kPcoefLevels.end());
    inputs = {{"mode", a.mode},
              {"T_list", T_list},
              {"channel", a.channel},
              {"pT_levels", levels}};
    result = {{"c2", c2}};
  } else if (a.mode == "pcoef-selftest") {
    const std::vector<int> T_list = parse_int_list(a.T_list);
    const double c2 = analysis::p_coefficient_fit_synthetic(T_list);
    inputs = {{"mode", a.mode}, {"T_list", T_list}};
    result = {{"c2", c2}};
  } else {
    throw std::invalid_argument(
        "unknown mode '" + a.mode + "' (expected slope|pcoef|pcoef-selftest)");
  }

  json j;
  j["metadata"] = std::move(meta);
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  io::write_file(a.out, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coined quantum walk on the line with per-step projective dephasing"};
  app.set_version_flag("--version", std::string("qwalk ") + kVersion);
  app.require_subcommand(1);

  WalkArgs walk_args;
  auto* walk = app.add_subcommand(
      "walk", "noiseless walk: distribution and moments after T steps");
  walk->add_option("--T", walk_args.T, "number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  walk->add_option("--coin-init", walk_args.coin_init,
                   "initial coin state: plus|minus|symmetric");
  walk->add_option("--out", walk_args.out,
                   "output path prefix (<out>.dist.csv and <out>.moments.csv, "
                   "or <out>.json)")
      ->required();
  walk->add_option("--format", walk_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  MasterArgs master_args;
  auto* master = app.add_subcommand(
      "master", "master-equation walk with dephasing probability p per step");
  master->add_option("--T", master_args.T, "number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  master->add_option("--p", master_args.p, "decoherence probability per step")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  master->add_option("--channel", master_args.channel, "coin|position|both");
  master->add_option("--coin-init", master_args.coin_init,
                     "plus|minus|symmetric");
  master->add_option("--out", master_args.out, "output path prefix")
      ->required();
  master->add_option("--format", master_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  TrajArgs traj_args;
  auto* traj = app.add_subcommand(
      "traj", "Monte-Carlo trajectory estimate of the dephased walk");
  traj->add_option("--T", traj_args.T, "number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  traj->add_option("--p", traj_args.p, "decoherence probability per step")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  traj->add_option("--channel", traj_args.channel, "coin|position|both");
  traj->add_option("--coin-init", traj_args.coin_init, "plus|minus|symmetric");
  traj->add_option("--runs", traj_args.runs, "number of trajectories")
      ->check(CLI::PositiveNumber);
  traj->add_option("--seed", traj_args.seed, "master seed");
  traj->add_option("--jobs", traj_args.jobs,
                   "worker threads (0 = hardware)");
  traj->add_option("--out", traj_args.out, "output path prefix")->required();
  traj->add_option("--format", traj_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "moments over a (channel, T, p) grid, one row per point");
  sweep->add_option("--T", sweep_args.T_list, "comma list of step counts")
      ->required();
  sweep->add_option("--p", sweep_args.p_list, "comma list of p values");
  sweep->add_option("--p-log", sweep_args.p_log,
                    "log-spaced p grid min:max:count");
  sweep->add_option("--channel", sweep_args.channels,
                    "comma list of coin|position|both, or all");
  sweep->add_option("--coin-init", sweep_args.coin_init,
                    "plus|minus|symmetric");
  sweep->add_option("--engine", sweep_args.engine, "master|traj");
  sweep->add_option("--runs", sweep_args.runs,
                    "trajectories per point (traj engine)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.seed, "master seed (traj engine)");
  sweep->add_option("--jobs", sweep_args.jobs, "parallel grid points")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_args.out, "output file path")->required();
  sweep->add_option("--format", sweep_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "small-p slope and p-coefficient fits (JSON output)");
  analyze->add_option("--mode", analyze_args.mode,
                      "slope|pcoef|pcoef-selftest")
      ->required();
  analyze->add_option("--T", analyze_args.T, "T for slope mode");
  analyze->add_option("--T-list", analyze_args.T_list,
                      "comma list of T for pcoef modes");
  analyze->add_option("--p-grid", analyze_args.p_grid,
                      "comma list of p for slope mode (default pT = 0,0.05,0.1)");
  analyze->add_option("--channel", analyze_args.channel, "coin|position|both");
  analyze->add_option("--jobs", analyze_args.jobs, "parallel grid points")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--out", analyze_args.out, "output JSON path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (walk->parsed()) do_walk(walk_args);
    if (master->parsed()) do_master(master_args);
    if (traj->parsed()) do_traj(traj_args);
    if (sweep->parsed()) do_sweep(sweep_args);
    if (analyze->parsed()) do_analyze(analyze_args);
  } catch (const RegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
