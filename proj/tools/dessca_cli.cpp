// Command-line front end: experiment campaigns, the online space-filling
// sampler, density grids for plotting, and summary comparison.
//
// Exit codes: 0 success, 1 runtime failure, 2 invalid configuration.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dessca/harness.hpp"
#include "dessca/kde.hpp"
#include "dessca/seeds.hpp"

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_config_keys(const CLI::App* sub) {
  std::cerr << "valid config keys for '" << sub->get_name() << "':";
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "config") continue;
    std::cerr << ' ' << name;
  }
  std::cerr << '\n';
}

struct RunOpts {
  std::string env = "mountain_car";
  std::string strategy = "es";
  std::string policy = "random";
  std::string output_dir = ".";
  std::uint64_t seed = 0;
  int repetitions = 1;
  // -1 means "keep the per-environment default"
  long total_steps = -1;
  long steps_per_episode = -1;
  long validation_episodes = -1;
  long validation_steps = -1;
  long pmsm_segment_steps = -1;
  long buffer_capacity = -1;
  int pso_particles = -1;
  int pso_iterations = -1;
  double bandwidth = 0.1;
  double gamma = 0.99;
};

// CLI11 only processes a config file registered on the root app, so the run
// subcommand loads its flat key=value file by hand. Keys already given on the
// command line keep their values.
void apply_config_file(const std::string& path, const CLI::App* run, RunOpts& o) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read config file " + path);

  const auto strip = [](const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  const auto given = [run](const char* name) { return run->count(name) > 0; };

  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + " line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));

    const auto bad_value = [&key, &value]() {
      return std::invalid_argument("config key '" + key + "': bad value '" + value + "'");
    };
    const auto to_long = [&](long lo) {
      std::size_t pos = 0;
      long x = 0;
      try {
        x = std::stol(value, &pos);
      } catch (...) {
        throw bad_value();
      }
      if (pos != value.size() || x < lo) throw bad_value();
      return x;
    };
    const auto to_double = [&](double lo, double hi) {
      std::size_t pos = 0;
      double x = 0.0;
      try {
        x = std::stod(value, &pos);
      } catch (...) {
        throw bad_value();
      }
      if (pos != value.size() || x < lo || x > hi) throw bad_value();
      return x;
    };

    if (key == "env") {
      if (!given("--env")) o.env = value;
    } else if (key == "strategy") {
      if (!given("--strategy")) o.strategy = value;
    } else if (key == "policy") {
      if (!given("--policy")) o.policy = value;
    } else if (key == "output-dir") {
      if (!given("--output-dir")) o.output_dir = value;
    } else if (key == "seed") {
      if (!given("--seed")) o.seed = static_cast<std::uint64_t>(to_long(0));
    } else if (key == "repetitions") {
      if (!given("--repetitions")) o.repetitions = static_cast<int>(to_long(1));
    } else if (key == "total-steps") {
      if (!given("--total-steps")) o.total_steps = to_long(1);
    } else if (key == "steps-per-episode") {
      if (!given("--steps-per-episode")) o.steps_per_episode = to_long(1);
    } else if (key == "validation-episodes") {
      if (!given("--validation-episodes")) o.validation_episodes = to_long(1);
    } else if (key == "validation-steps") {
      if (!given("--validation-steps")) o.validation_steps = to_long(1);
    } else if (key == "pmsm-segment-steps") {
      if (!given("--pmsm-segment-steps")) o.pmsm_segment_steps = to_long(1);
    } else if (key == "buffer-capacity") {
      if (!given("--buffer-capacity")) o.buffer_capacity = to_long(0);
    } else if (key == "pso-particles") {
      if (!given("--pso-particles")) o.pso_particles = static_cast<int>(to_long(1));
    } else if (key == "pso-iterations") {
      if (!given("--pso-iterations")) o.pso_iterations = static_cast<int>(to_long(1));
    } else if (key == "bandwidth") {
      if (!given("--bandwidth")) o.bandwidth = to_double(1e-9, 1e9);
    } else if (key == "gamma") {
      if (!given("--gamma")) o.gamma = to_double(0.0, 1.0);
    } else {
      print_config_keys(run);
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

int cmd_run(const RunOpts& o) {
  dessca::ExperimentConfig cfg =
      dessca::ExperimentConfig::defaults_for(dessca::env_from_string(o.env));
  cfg.strategy = dessca::strategy_from_string(o.strategy);
  cfg.policy = dessca::policy_from_string(o.policy);
  cfg.master_seed = o.seed;
  cfg.repetitions = o.repetitions;
  cfg.bandwidth = o.bandwidth;
  cfg.gamma = o.gamma;
  if (o.total_steps >= 0) cfg.total_training_steps = o.total_steps;
  if (o.steps_per_episode >= 0) cfg.steps_per_episode = static_cast<int>(o.steps_per_episode);
  if (o.validation_episodes >= 0) cfg.validation_episodes = o.validation_episodes;
  if (o.validation_steps >= 0) cfg.validation_steps = o.validation_steps;
  if (o.pmsm_segment_steps >= 0) cfg.pmsm_segment_steps = static_cast<int>(o.pmsm_segment_steps);
  if (o.buffer_capacity >= 0) cfg.buffer_capacity = static_cast<size_t>(o.buffer_capacity);
  if (o.pso_particles >= 0) cfg.pso_particles = o.pso_particles;
  if (o.pso_iterations >= 0) cfg.pso_iterations = o.pso_iterations;

  const std::filesystem::path out_dir(o.output_dir);
  std::filesystem::create_directories(out_dir);

  const dessca::CampaignResults results = dessca::run_repetitions(cfg);

  const auto env = dessca::make_environment(cfg.env, cfg.gamma);
  const std::string strategy_name(dessca::to_string(cfg.strategy));
  for (int r = 0; r < cfg.repetitions; ++r) {
    char name[64];
    std::snprintf(name, sizeof name, "record_%s_rep%03d.csv", strategy_name.c_str(), r);
    dessca::write_record_csv(out_dir / name, results.records[r], *env);
  }
  const std::filesystem::path summary_path = out_dir / ("summary_" + strategy_name + ".json");
  dessca::write_summary_json(summary_path, results.summary);

  nlohmann::ordered_json j;
  j["median"] = results.summary.median;
  j["iqr"] = results.summary.iqr;
  j["mean"] = results.summary.mean;
  j["ci_low"] = results.summary.ci_low;
  j["ci_high"] = results.summary.ci_high;
  j["n"] = results.summary.n;
  std::cout << j.dump(2) << '\n';
  return 0;
}

struct SampleOpts {
  int dim = 2;
  int count = 100;
  std::uint64_t seed = 0;
  double bandwidth = 0.1;
  std::string reference = "uniform";
  std::string output;  // empty = stdout
};

int cmd_sample(const SampleOpts& o) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + o.output + " for writing");
    os = &file;
  }
  for (int i = 0; i < o.dim; ++i) *os << (i ? "," : "") << "x" << (i + 1);
  *os << '\n' << std::flush;

  const dessca::ReferenceDensity ref = dessca::ReferenceDensity::uniform_box(o.dim);
  dessca::sample_stream(o.dim, o.count, ref, o.seed, o.bandwidth, [&](const dessca::Vec& x) {
    for (int i = 0; i < o.dim; ++i) *os << (i ? "," : "") << fmt17(x[i]);
    *os << '\n' << std::flush;  // online mode: each point leaves before the next is computed
  });
  return 0;
}

struct DensityOpts {
  std::string points_file;
  std::string output;  // empty = stdout
  double bandwidth = 0.1;
  int resolution = 101;
};

std::vector<dessca::Vec> read_points_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<dessca::Vec> points;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    dessca::Vec row;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        row.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (points.empty()) continue;  // header row
      throw std::runtime_error("non-numeric cell in " + path + ": " + line);
    }
    points.push_back(std::move(row));
  }
  return points;
}

int cmd_density(const DensityOpts& o) {
  const std::vector<dessca::Vec> points = read_points_csv(o.points_file);
  if (points.empty()) {
    std::cerr << "density: no points in " << o.points_file << '\n';
    return 2;
  }
  for (const auto& p : points) {
    if (p.size() != 2) {
      std::cerr << "density: points must be 2-dimensional\n";
      return 2;
    }
  }

  dessca::CoverageEstimator kde(2, o.bandwidth);
  kde.observe(points);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + o.output + " for writing");
    os = &file;
  }
  *os << "x1,x2,density\n";
  dessca::Vec x(2);
  for (int i = 0; i < o.resolution; ++i) {
    x[0] = -1.0 + 2.0 * i / (o.resolution - 1);
    for (int j = 0; j < o.resolution; ++j) {
      x[1] = -1.0 + 2.0 * j / (o.resolution - 1);
      *os << fmt17(x[0]) << ',' << fmt17(x[1]) << ',' << fmt17(kde.density(x)) << '\n';
    }
  }
  return 0;
}

int cmd_summarize(const std::string& baseline_path, const std::string& candidate_path) {
  dessca::RunSummary baseline, candidate;
  try {
    baseline = dessca::read_summary_json(baseline_path);
    candidate = dessca::read_summary_json(candidate_path);
  } catch (const std::exception& e) {
    std::cerr << "summarize: " << e.what() << '\n';
    return 2;
  }

  char buf[256];
  std::snprintf(buf, sizeof buf, "median:      %.6g -> %.6g  (%+.3f%%)\n", baseline.median,
                candidate.median, dessca::relative_median_improvement(baseline, candidate));
  std::cout << buf;
  std::snprintf(buf, sizeof buf, "iqr:         %.6g -> %.6g  (%s)\n", baseline.iqr, candidate.iqr,
                candidate.iqr < baseline.iqr ? "tighter" : "wider or equal");
  std::cout << buf;
  std::snprintf(buf, sizeof buf, "mean:        %.6g -> %.6g\n", baseline.mean, candidate.mean);
  std::cout << buf;
  std::snprintf(buf, sizeof buf, "95%% ci:      [%.6g, %.6g] -> [%.6g, %.6g]\n", baseline.ci_low,
                baseline.ci_high, candidate.ci_low, candidate.ci_high);
  std::cout << buf;
  std::cout << "significant: " << (dessca::significantly_better(baseline, candidate) ? "yes" : "no")
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-space coverage experiments: KDE-guided episode initialization"};
  app.require_subcommand(1);

  RunOpts run_opts;
  CLI::App* run = app.add_subcommand("run", "train/validate campaigns under es or dessca inits");
  run->add_option("--env", run_opts.env, "environment")
      ->check(CLI::IsMember({"mountain_car", "cartpole", "pmsm"}));
  run->add_option("--strategy", run_opts.strategy, "initialization strategy")
      ->check(CLI::IsMember({"es", "dessca"}));
  run->add_option("--policy", run_opts.policy, "acting policy")
      ->check(CLI::IsMember({"random", "mc_bangbang", "cp_balance"}));
  run->add_option("--seed", run_opts.seed, "master seed");
  run->add_option("--repetitions", run_opts.repetitions, "independent repetitions")
      ->check(CLI::PositiveNumber);
  run->add_option("--output-dir", run_opts.output_dir, "artifact directory");
  run->add_option("--total-steps", run_opts.total_steps, "training step budget")
      ->check(CLI::PositiveNumber);
  run->add_option("--steps-per-episode", run_opts.steps_per_episode, "max episode length")
      ->check(CLI::PositiveNumber);
  run->add_option("--validation-episodes", run_opts.validation_episodes, "validation episode count")
      ->check(CLI::PositiveNumber);
  run->add_option("--validation-steps", run_opts.validation_steps,
                  "max steps per validation episode")
      ->check(CLI::PositiveNumber);
  run->add_option("--pmsm-segment-steps", run_opts.pmsm_segment_steps,
                  "operating-point hold steps in the pmsm validation run")
      ->check(CLI::PositiveNumber);
  run->add_option("--buffer-capacity", run_opts.buffer_capacity,
                  "coverage buffer capacity (0 = unbounded)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--pso-particles", run_opts.pso_particles, "swarm size override")
      ->check(CLI::PositiveNumber);
  run->add_option("--pso-iterations", run_opts.pso_iterations, "swarm iteration override")
      ->check(CLI::PositiveNumber);
  run->add_option("--bandwidth", run_opts.bandwidth, "KDE bandwidth")->check(CLI::PositiveNumber);
  run->add_option("--gamma", run_opts.gamma, "discount factor (pmsm reward scale)")
      ->check(CLI::Range(0.0, 1.0));
  std::string config_path;
  run->add_option("--config", config_path, "flat key=value config file; command line wins")
      ->configurable(false);

  SampleOpts sample_opts;
  CLI::App* sample = app.add_subcommand("sample", "stream space-filling design points");
  sample->add_option("--dim", sample_opts.dim, "dimension")->check(CLI::PositiveNumber);
  sample->add_option("--count", sample_opts.count, "number of points")->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_opts.seed, "seed");
  sample->add_option("--bandwidth", sample_opts.bandwidth, "KDE bandwidth")
      ->check(CLI::PositiveNumber);
  sample->add_option("--reference", sample_opts.reference, "target density")
      ->check(CLI::IsMember({"uniform"}));
  sample->add_option("--output", sample_opts.output, "CSV path (default stdout)");

  DensityOpts density_opts;
  CLI::App* density = app.add_subcommand("density", "KDE grid over [-1,1]^2 for plotting");
  density->add_option("--points", density_opts.points_file, "CSV file of 2-D points")->required();
  density->add_option("--bandwidth", density_opts.bandwidth, "KDE bandwidth")
      ->check(CLI::PositiveNumber);
  density->add_option("--resolution", density_opts.resolution, "grid points per axis")
      ->check(CLI::Range(2, 4001));
  density->add_option("--output", density_opts.output, "CSV path (default stdout)");

  std::string baseline_path, candidate_path;
  CLI::App* summarize = app.add_subcommand("summarize", "compare two summary JSON files");
  summarize->add_option("baseline", baseline_path, "baseline summary JSON")->required();
  summarize->add_option("candidate", candidate_path, "candidate summary JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      if (!config_path.empty()) apply_config_file(config_path, run, run_opts);
      return cmd_run(run_opts);
    }
    if (sample->parsed()) return cmd_sample(sample_opts);
    if (density->parsed()) return cmd_density(density_opts);
    if (summarize->parsed()) return cmd_summarize(baseline_path, candidate_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
