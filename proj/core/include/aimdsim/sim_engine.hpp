// Round-based fluid simulator. One step advances every flow and the
// bottleneck by a single round trip: pending reductions apply, everyone
// else grows by its additive increase, the shared queue and RTT follow
// from the window total, and the bottleneck marks flows for the next
// round. Deterministic given the seed.
#pragma once

#include "aimdsim/bottleneck.hpp"
#include "aimdsim/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aimdsim {

/// Which queue model sits at the bottleneck, and its knobs. The tail-drop
/// brim itself always comes from the scenario's buffer.
struct BottleneckConfig {
  enum class Kind { TailDrop, Pie };
  Kind kind = Kind::TailDrop;
  TailDropState::SyncMode sync_mode = TailDropState::SyncMode::AllFlowsReduce;
  LossCountPolicy losses_per_event;
  PieState pie;

  /// True when any outcome depends on the RNG.
  bool stochastic() const {
    return kind == Kind::Pie || sync_mode == TailDropState::SyncMode::ProbabilisticHits;
  }
};

struct SimConfig {
  Scenario scenario;
  BottleneckConfig bottleneck;
  std::int64_t max_rounds = 1'000'000;
  double convergence_epsilon = 1e-9;  // relative, on event-round window vectors
  std::uint64_t seed = 1;
  std::vector<double> initial_cwnd;  // empty = one segment per flow
  bool record_trace = true;          // false: keep only cumulative totals
};

struct Trace {
  int num_flows = 0;
  std::vector<RoundRecord> rounds;           // empty when record_trace=false
  std::vector<std::int64_t> event_rounds;    // rounds with a congestion event
  bool converged = false;                    // deterministic runs only
  std::int64_t converged_round = -1;         // event round that repeated
  std::vector<double> cumulative_pkts;       // per flow, over the whole run
  double total_time_s = 0;
};

/// Resumable simulation; `run` below wraps the common loop.
class Simulation {
 public:
  explicit Simulation(const SimConfig& config);

  /// Advances one round trip. Returns the record of the round just run
  /// (valid until the next step).
  const RoundRecord& step();

  std::int64_t round() const { return round_; }
  double now_s() const { return trace_.total_time_s; }
  int events_seen() const { return static_cast<int>(trace_.event_rounds.size()); }
  bool converged() const { return trace_.converged; }
  bool deterministic() const { return !config_.bottleneck.stochastic(); }
  const SimConfig& config() const { return config_; }
  const Trace& trace() const { return trace_; }
  Trace take_trace() { return std::move(trace_); }

  /// Per-flow cumulative packets delivered so far.
  const std::vector<double>& cumulative_pkts() const { return trace_.cumulative_pkts; }

 private:
  SimConfig config_;
  Rng rng_;
  std::vector<FlowState> flows_;
  PieState pie_;
  double pie_clock_s_ = 0;  // time since last controller update
  std::int64_t round_ = 0;
  RoundRecord current_;
  std::vector<double> last_event_cwnd_;
  Trace trace_;
};

/// Runs until convergence (deterministic modes) or max_rounds. A run that
/// never converges is reported through Trace::converged, not an error.
Trace run(const SimConfig& config);

/// Statistics of one sawtooth cycle, the rounds (e_prev, e] between two
/// congestion events: J is the number of growth rounds (one less than the
/// round count), peaks are read at the closing event round, and
/// packets/duration sum over the whole cycle.
/// Throws std::runtime_error("no complete cycle observed") without >= 2 events.
std::vector<CycleStats> detect_cycles(const Trace& trace, const Scenario& scenario);

/// The last complete cycle; in a converged deterministic run this is the
/// steady-state cycle.
CycleStats detect_cycle(const Trace& trace, const Scenario& scenario);

/// Per-second-style normalized flow rate samples: delivered packets per
/// interval, divided by capacity/N. Sampling starts at start_s; rounds are
/// split fluidly across interval boundaries. result[flow][k] is sample k.
std::vector<std::vector<double>> normalized_rates(const Trace& trace, const LinkConfig& link,
                                                  int total_flows, double start_s,
                                                  double interval_s, int count);

}  // namespace aimdsim
