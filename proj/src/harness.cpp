#include "dessca/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "dessca/pmsm.hpp"
#include "dessca/seeds.hpp"

namespace dessca {

std::string_view to_string(Strategy s) {
  return s == Strategy::es ? "es" : "dessca";
}

Strategy strategy_from_string(std::string_view name) {
  if (name == "es") return Strategy::es;
  if (name == "dessca") return Strategy::dessca;
  throw std::invalid_argument("unknown strategy: " + std::string(name) +
                              " (expected es or dessca)");
}

ExperimentConfig ExperimentConfig::defaults_for(EnvId env) {
  ExperimentConfig cfg;
  cfg.env = env;
  switch (env) {
    case EnvId::mountain_car:
      cfg.total_training_steps = 30000;
      cfg.steps_per_episode = 200;
      cfg.validation_episodes = 1000;
      cfg.validation_steps = 200;
      cfg.buffer_capacity = 0;
      break;
    case EnvId::cartpole:
      cfg.total_training_steps = 100000;
      cfg.steps_per_episode = 200;
      cfg.validation_episodes = 1000;
      cfg.validation_steps = 200;
      cfg.buffer_capacity = 0;
      break;
    case EnvId::pmsm:
      cfg.total_training_steps = 400000;
      cfg.steps_per_episode = 100;
      cfg.validation_episodes = 1;
      cfg.validation_steps = 190500;
      cfg.buffer_capacity = 100000;
      break;
  }
  return cfg;
}

double normalized_return(std::span<const double> rewards, double r_max) {
  if (rewards.empty()) throw std::invalid_argument("normalized_return: no rewards collected");
  if (r_max <= 0.0) throw std::invalid_argument("normalized_return: r_max must be positive");
  double sum = 0.0;
  for (double r : rewards) sum += r;
  return sum / (static_cast<double>(rewards.size()) * r_max);
}

Vec sample_feasible_init(const Environment& env, std::mt19937_64& rng, int max_attempts) {
  const auto& b = env.bounds();
  const int d = env.dim();
  Vec x(d);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (int i = 0; i < d; ++i) {
      std::uniform_real_distribution<double> dist(b.lower()[i], b.upper()[i]);
      x[i] = dist(rng);
    }
    if (env.feasible_init(x)) return x;
  }
  throw std::runtime_error("sample_feasible_init: no feasible state found by rejection sampling");
}

ReferenceDensity make_env_reference(const Environment& env, uint64_t seed) {
  // Mountain car's whole box is feasible, so the exact uniform density
  // applies; the others get a Monte Carlo uniform over their feasible set.
  // The returned density keeps a reference to env and must not outlive it.
  if (env.name() == "mountain_car") return ReferenceDensity::uniform_box(env.dim());
  const BoxBounds bounds = env.bounds();
  return ReferenceDensity::uniform_feasible(
      env.dim(),
      [&env, bounds](const Vec& xn) { return env.feasible_init(denormalize(xn, bounds)); },
      seed);
}

namespace {

EpisodeLog rollout(Environment& env, Policy& policy, const Vec& init, long episode_index,
                   long max_steps, std::vector<Vec>* visited_out) {
  EpisodeLog ep;
  ep.init_physical = init;
  ep.init_normalized = normalize(init, env.bounds());
  env.reset_to(init);
  if (visited_out) visited_out->push_back(ep.init_normalized);
  for (long s = 0; s < max_steps; ++s) {
    StepLog row;
    row.episode = episode_index;
    row.step = s;
    row.state = env.state();
    row.action = policy.act(row.state);
    const Transition tr = env.step(row.action);
    row.reward = tr.reward;
    row.terminated = tr.terminated;
    ep.steps.push_back(std::move(row));
    if (visited_out && env.bounds().contains(tr.next_state)) {
      visited_out->push_back(normalize(tr.next_state, env.bounds()));
    }
    if (tr.terminated) {
      ep.terminated = true;
      break;
    }
  }
  return ep;
}

}  // namespace

ExperimentRecord run_campaign(const ExperimentConfig& cfg, int repetition) {
  auto env = make_environment(cfg.env, cfg.gamma);
  const BoxBounds& bounds = env->bounds();
  const int d = env->dim();

  // Two policy streams per repetition: one consumed during training, a fresh
  // one for validation so that validation behavior does not depend on how
  // much randomness training used (and therefore not on the strategy).
  auto train_policy = make_policy(cfg.policy, *env,
                                  derive_seed(cfg.master_seed, Stream::policy, 2 * repetition));
  auto val_policy = make_policy(cfg.policy, *env,
                                derive_seed(cfg.master_seed, Stream::policy, 2 * repetition + 1));

  ExperimentRecord record;

  std::mt19937_64 es_rng(derive_seed(cfg.master_seed, Stream::es_init, repetition));
  std::optional<DesscaEngine> engine;
  if (cfg.strategy == Strategy::dessca) {
    SwarmConfig swarm =
        SwarmConfig::defaults_for(d, derive_seed(cfg.master_seed, Stream::pso, repetition));
    if (cfg.pso_particles > 0) swarm.particles = cfg.pso_particles;
    if (cfg.pso_iterations > 0) swarm.iterations = cfg.pso_iterations;
    engine.emplace(CoverageEstimator(d, cfg.bandwidth, cfg.buffer_capacity),
                   make_env_reference(*env, derive_seed(cfg.master_seed, Stream::reference_mc, 0)),
                   swarm);
  }

  long remaining = cfg.total_training_steps;
  long episode_index = 0;
  while (remaining > 0) {
    const long ep_budget = std::min<long>(cfg.steps_per_episode, remaining);
    try {
      const Vec init = engine ? denormalize(engine->propose(), bounds)
                              : sample_feasible_init(*env, es_rng);
      std::vector<Vec> visited;
      EpisodeLog ep = rollout(*env, *train_policy, init, episode_index, ep_budget, &visited);
      remaining -= static_cast<long>(ep.steps.size());
      if (engine) engine->record_episode(visited);
      record.visited_normalized.insert(record.visited_normalized.end(), visited.begin(),
                                       visited.end());
      record.training.push_back(std::move(ep));
    } catch (const std::exception& e) {
      throw std::runtime_error("training episode " + std::to_string(episode_index) + ": " +
                               e.what());
    }
    ++episode_index;
  }

  std::vector<double> rewards;
  try {
    if (cfg.env == EnvId::pmsm) {
      // One long run with a piecewise constant operating point schedule:
      // every segment redraws (omega_me, i_d*, i_q*) from the feasible set
      // while the currents and rotor angle carry over. The schedule stream
      // depends only on the master seed and repetition, never the strategy.
      std::mt19937_64 sched_rng(derive_seed(cfg.master_seed, Stream::schedule, repetition));
      auto* pmsm = dynamic_cast<Pmsm*>(env.get());
      for (long ep = 0; ep < cfg.validation_episodes; ++ep) {
        EpisodeLog log;
        long steps_done = 0;
        while (steps_done < cfg.validation_steps && !log.terminated) {
          const Vec seg_state = sample_feasible_init(*env, sched_rng);
          if (steps_done == 0) {
            log.init_physical = seg_state;
            log.init_normalized = normalize(seg_state, bounds);
            env->reset_to(seg_state);
          } else {
            pmsm->apply_operating_point(seg_state[2], seg_state[4], seg_state[5]);
          }
          const long seg_budget =
              std::min<long>(cfg.pmsm_segment_steps, cfg.validation_steps - steps_done);
          for (long s = 0; s < seg_budget; ++s) {
            StepLog row;
            row.episode = episode_index + ep;
            row.step = steps_done;
            row.state = env->state();
            row.action = val_policy->act(row.state);
            const Transition tr = env->step(row.action);
            row.reward = tr.reward;
            row.terminated = tr.terminated;
            rewards.push_back(tr.reward);
            log.steps.push_back(std::move(row));
            ++steps_done;
            if (tr.terminated) {
              log.terminated = true;
              break;
            }
          }
        }
        record.validation.push_back(std::move(log));
      }
    } else {
      std::mt19937_64 val_rng(derive_seed(cfg.master_seed, Stream::validation_init, repetition));
      for (long ep = 0; ep < cfg.validation_episodes; ++ep) {
        const Vec init = sample_feasible_init(*env, val_rng);
        EpisodeLog log =
            rollout(*env, *val_policy, init, episode_index + ep, cfg.validation_steps, nullptr);
        for (const auto& row : log.steps) rewards.push_back(row.reward);
        record.validation.push_back(std::move(log));
      }
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("validation: " + std::string(e.what()));
  }

  record.normalized_return = normalized_return(rewards, env->max_reward());
  return record;
}

CampaignResults run_repetitions(const ExperimentConfig& cfg) {
  if (cfg.repetitions < 1) throw std::invalid_argument("run_repetitions: repetitions must be >= 1");
  CampaignResults out;
  out.records.resize(cfg.repetitions);
  std::vector<std::string> errors(cfg.repetitions);
  std::atomic<bool> failed{false};

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.repetitions; ++r) {
    try {
      out.records[r] = run_campaign(cfg, r);
    } catch (const std::exception& e) {
      errors[r] = e.what();
      failed = true;
    }
  }
  if (failed) {
    for (int r = 0; r < cfg.repetitions; ++r) {
      if (!errors[r].empty()) {
        throw std::runtime_error("repetition " + std::to_string(r) + ": " + errors[r]);
      }
    }
  }

  out.returns.reserve(cfg.repetitions);
  for (const auto& rec : out.records) out.returns.push_back(rec.normalized_return);
  if (out.returns.size() >= 2) {
    out.summary = summarize(out.returns);
  } else {
    out.summary.median = out.summary.mean = out.summary.ci_low = out.summary.ci_high =
        out.returns.front();
    out.summary.iqr = 0.0;
    out.summary.n = 1;
  }
  return out;
}

void sample_stream(int dim, int n, const ReferenceDensity& reference, uint64_t seed,
                   double bandwidth, const std::function<void(const Vec&)>& emit) {
  if (dim < 1 || n < 1) throw std::invalid_argument("sample_stream: dim and n must be positive");
  DesscaEngine engine(CoverageEstimator(dim, bandwidth), reference,
                      SwarmConfig::defaults_for(dim, derive_seed(seed, Stream::pso)));
  for (int i = 0; i < n; ++i) {
    const Vec x = engine.propose();
    emit(x);  // stream the point out before any further work happens
    engine.record_episode(std::span<const Vec>(&x, 1));
  }
}

namespace {

void write_double(std::ofstream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

void write_row(std::ofstream& os, const StepLog& row) {
  os << row.episode << ',' << row.step;
  for (double v : row.state) {
    os << ',';
    write_double(os, v);
  }
  for (double v : row.action) {
    os << ',';
    write_double(os, v);
  }
  os << ',';
  write_double(os, row.reward);
  os << ',' << (row.terminated ? 1 : 0) << '\n';
}

}  // namespace

void write_record_csv(const std::filesystem::path& path, const ExperimentRecord& record,
                      const Environment& env) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << "episode,step";
  for (const auto& label : env.state_labels()) os << ',' << label;
  for (const auto& label : env.action_labels()) os << ',' << label;
  os << ",reward,terminated\n";
  for (const auto& ep : record.training) {
    for (const auto& row : ep.steps) write_row(os, row);
  }
  for (const auto& ep : record.validation) {
    for (const auto& row : ep.steps) write_row(os, row);
  }
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

void write_summary_json(const std::filesystem::path& path, const RunSummary& summary) {
  nlohmann::ordered_json j;
  j["median"] = summary.median;
  j["iqr"] = summary.iqr;
  j["mean"] = summary.mean;
  j["ci_low"] = summary.ci_low;
  j["ci_high"] = summary.ci_high;
  j["n"] = summary.n;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << j.dump(2) << '\n';
}

RunSummary read_summary_json(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  const nlohmann::json j = nlohmann::json::parse(is);
  RunSummary s;
  s.median = j.at("median");
  s.iqr = j.at("iqr");
  s.mean = j.at("mean");
  s.ci_low = j.at("ci_low");
  s.ci_high = j.at("ci_high");
  s.n = j.at("n");
  return s;
}

}  // namespace dessca
