// Bottleneck queue models. Each round the queue decides the backlog, the
// RTT, and which flows see loss: a tail-drop brim check (with either fully
// synchronized reductions or probabilistic per-loss hit assignment) and a
// PIE-style proportional-integral AQM that marks flows independently.
#pragma once

#include "aimdsim/rng.hpp"
#include "aimdsim/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace aimdsim {

/// How many losses a tail-drop congestion event carries.
/// Fixed: always the given count. Auto: the aggregate additive increase per
/// RTT plus the fractional part of the brim overshoot, rounded, floor 1.
struct LossCountPolicy {
  std::optional<int> fixed = 2;

  static LossCountPolicy auto_from_growth() { return LossCountPolicy{std::nullopt}; }
  static LossCountPolicy fixed_count(int n) { return LossCountPolicy{n}; }

  int resolve(double aggregate_ai, double overshoot_pkts) const;
};

struct TailDropState {
  enum class SyncMode { AllFlowsReduce, ProbabilisticHits };
  double buffer_pkts = 0;  // >= 1
  SyncMode sync_mode = SyncMode::AllFlowsReduce;
  LossCountPolicy losses_per_event;
};

/// Outcome of a bottleneck check for one round.
struct LossEvent {
  std::vector<std::uint8_t> hit;     // per flow, 1 = reduce next round
  std::vector<std::int32_t> losses;  // per flow, raw loss count this event
  int total_losses = 0;
};

/// Queue geometry for a fluid round: backlog above the BDP, the resulting
/// RTT, and the link utilization.
struct QueueSample {
  double queue_pkts = 0;
  double rtt_s = 0;
  double utilization = 0;
};

/// queue = max(0, total_cwnd - BDP); rtt = base + queue/capacity;
/// utilization = min(1, total_cwnd/BDP).
QueueSample queue_and_rtt(double total_cwnd, const LinkConfig& link);

/// Tail-drop brim check. No event while queue <= buffer. Past the brim,
/// AllFlowsReduce marks every flow; ProbabilisticHits draws L losses and
/// assigns each to a flow with probability proportional to its current
/// packet rate (a flow reduces once however many losses it catches).
std::optional<LossEvent> taildrop_check(double queue_pkts, const TailDropState& state,
                                        const std::vector<double>& flow_rates,
                                        double aggregate_ai, Rng& rng);

/// PIE controller state. Defaults follow the common PI controller
/// parameterization: 15 ms target, 15 ms update interval, per-second gains
/// alpha = 0.125 and beta = 1.25. All configurable.
struct PieState {
  double drop_prob = 0;          // clamped to [0,1]
  double target_delay_s = 0.015;
  double update_interval_s = 0.015;
  double alpha = 0.125;  // 1/s, on the delay error
  double beta = 1.25;    // 1/s, on the delay trend
  double last_qdelay_s = 0;
};

/// One controller step:
/// p <- clamp(p + alpha*(qdelay - target) + beta*(qdelay - last_qdelay), 0, 1).
PieState pie_update(const PieState& state, double qdelay_s);

/// Per-round marking decision. Each flow is marked independently with
/// probability 1 - (1-p)^cwnd. `eligible[i]` is false for a flow that
/// reduced within the previous round trip; such flows are never marked.
std::vector<std::uint8_t> pie_mark(const PieState& state, const std::vector<double>& cwnds,
                                   const std::vector<std::uint8_t>& eligible, Rng& rng);

}  // namespace aimdsim
