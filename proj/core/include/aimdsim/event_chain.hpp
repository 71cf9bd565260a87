// Long-run rates under probabilistic loss assignment, two ways.
//
// The exact route enumerates congestion-event states (per-flow windows at
// the moment the tail-drop brim is crossed, quantized to a grid), expands
//each event into hit-set outcomes with exact probabilities, grows windows
// deterministically to the next event, and solves the resulting Markov
// chain: stationary distribution by damped power iteration, long-run
// per-flow rates by renewal-reward (expected packets per transition over
// expected time per transition).
//
// The stochastic route replays the same scenarios through the seeded
// simulator and reports means with confidence intervals.
#pragma once

#include "aimdsim/friendliness.hpp"
#include "aimdsim/sim_engine.hpp"
#include "aimdsim/stats.hpp"
#include "aimdsim/types.hpp"

#include <cstdint>
#include <vector>

namespace aimdsim {

/// Windows at a congestion event, in quanta (window = quanta * quantum).
struct ChainState {
  std::vector<std::int64_t> quanta;
  bool operator==(const ChainState&) const = default;
};

struct ChainTransition {
  std::uint32_t to = 0;
  std::uint64_t hit_mask = 0;     // which flows reduced
  Ratio probability;              // exact outcome probability
  double probability_d = 0;
  std::vector<double> pkts;       // per flow, delivered over the epoch
  double time_s = 0;              // epoch duration
};

struct ChainBuildConfig {
  double quantum = 1.0;            // segments per grid step
  std::size_t max_states = 1'000'000;
};

struct EventChain {
  Scenario scenario;
  BottleneckConfig bottleneck;
  double quantum = 1.0;
  std::vector<ChainState> states;
  std::vector<std::vector<ChainTransition>> transitions;  // indexed by state
  std::uint32_t initial_state = 0;
};

struct StationaryConfig {
  double residual_tolerance = 1e-12;  // L1 distance of pi*P from pi
  std::int64_t max_iterations = 2'000'000;
};

struct StationaryResult {
  std::vector<double> probabilities;   // per state; zero outside the class
  std::vector<double> flow_rate_pps;   // renewal-reward long-run rates
  std::vector<double> ratio_to_fair;   // rate / (capacity/N)
  double residual = 0;
  std::int64_t iterations = 0;
  bool reducible = false;              // recurrent class smaller than chain
  std::size_t recurrent_states = 0;
};

/// Enumerates the reachable event states of a tail-drop scenario (2 to 4
/// flows) under the given bottleneck config. Hit probabilities use the
/// flows' instantaneous rates at the event, which share one RTT and are
/// therefore exactly proportional to the quantized windows.
/// Throws std::runtime_error when the state cap is exceeded.
EventChain build_chain(const Scenario& scenario, const BottleneckConfig& bottleneck,
                       const ChainBuildConfig& build = {});

/// Stationary distribution (largest recurrent class, with `reducible`
/// reporting when that is a strict subset) and renewal-reward rates.
StationaryResult stationary(const EventChain& chain, const StationaryConfig& config = {});

struct MonteCarloResult {
  std::vector<MeanCi> normalized_rate;            // per flow, CI across seeds
  std::vector<std::vector<double>> seed_samples;  // [flow][seed]
  int seeds = 0;
  double duration_s = 0;
};

/// Runs the stochastic simulator across `num_seeds` derived seeds, warms up
/// past `warmup_events` congestion events, then measures per-flow mean
/// normalized rates over `duration_s` of simulated time.
MonteCarloResult monte_carlo(const Scenario& scenario, const BottleneckConfig& bottleneck,
                             int num_seeds, std::uint64_t master_seed, double duration_s,
                             int warmup_events = 20, std::int64_t max_rounds = 10'000'000);

}  // namespace aimdsim
