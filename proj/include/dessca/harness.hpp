#pragma once

#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dessca/engine.hpp"
#include "dessca/environment.hpp"
#include "dessca/policies.hpp"
#include "dessca/stats.hpp"

namespace dessca {

enum class Strategy { es, dessca };

std::string_view to_string(Strategy s);
Strategy strategy_from_string(std::string_view name);

// One experiment: train under an initialization strategy, then validate on a
// strategy-independent set of episodes. Defaults follow the per-environment
// training/validation budgets (see defaults_for).
struct ExperimentConfig {
  EnvId env = EnvId::mountain_car;
  Strategy strategy = Strategy::es;
  PolicyId policy = PolicyId::random;

  long total_training_steps = 30000;
  int steps_per_episode = 200;
  long validation_episodes = 1000;
  long validation_steps = 200;   // per validation episode
  int pmsm_segment_steps = 500;  // operating-point hold time in the long PMSM run

  double bandwidth = 0.1;
  size_t buffer_capacity = 0;  // 0 = unbounded
  int pso_particles = 0;       // 0 = dimension-scaled default
  int pso_iterations = 0;
  double gamma = 0.99;

  uint64_t master_seed = 0;
  int repetitions = 1;

  static ExperimentConfig defaults_for(EnvId env);
};

struct StepLog {
  long episode = 0;
  long step = 0;
  Vec state;  // state the action was taken in
  Vec action;
  double reward = 0.0;
  bool terminated = false;
};

struct EpisodeLog {
  Vec init_physical;
  Vec init_normalized;
  std::vector<StepLog> steps;
  bool terminated = false;
};

struct ExperimentRecord {
  std::vector<EpisodeLog> training;
  std::vector<EpisodeLog> validation;
  // Normalized in-box states collected during training, in visit order; what
  // the coverage comparison between strategies looks at.
  std::vector<Vec> visited_normalized;
  double normalized_return = 0.0;
};

// Sum of validation rewards over K * r_max where K is the number of reward
// samples actually collected. Can be negative.
double normalized_return(std::span<const double> rewards, double r_max);

// Uniform draw over the feasible initialization set by rejection from the
// state box.
Vec sample_feasible_init(const Environment& env, std::mt19937_64& rng, int max_attempts = 100000);

// Reference density over normalized coordinates for an environment: exact
// uniform for a fully feasible box, Monte Carlo estimated uniform over the
// feasible set otherwise.
ReferenceDensity make_env_reference(const Environment& env, uint64_t seed);

// One repetition: training campaign followed by validation. All randomness
// is derived from cfg.master_seed and the repetition index; validation
// streams do not depend on the strategy, so both strategies face identical
// validation demands.
ExperimentRecord run_campaign(const ExperimentConfig& cfg, int repetition = 0);

// All repetitions (parallelized when OpenMP is available; results do not
// depend on the thread count) plus the summary of their normalized returns.
struct CampaignResults {
  std::vector<ExperimentRecord> records;
  std::vector<double> returns;
  RunSummary summary;
};

CampaignResults run_repetitions(const ExperimentConfig& cfg);

// Design-of-experiments mode: generate n space-filling points one at a time,
// calling emit for each point before the next one is computed.
void sample_stream(int dim, int n, const ReferenceDensity& reference, uint64_t seed,
                   double bandwidth, const std::function<void(const Vec&)>& emit);

// CSV: header row then one row per step (episode, step, state components,
// action components, reward, terminated), training episodes first, then
// validation episodes with continuing episode numbers.
void write_record_csv(const std::filesystem::path& path, const ExperimentRecord& record,
                      const Environment& env);

void write_summary_json(const std::filesystem::path& path, const RunSummary& summary);
RunSummary read_summary_json(const std::filesystem::path& path);

}  // namespace dessca
