#include "aimdsim/bottleneck.hpp"

#include <algorithm>
#include <cmath>

namespace aimdsim {

int LossCountPolicy::resolve(double aggregate_ai, double overshoot_pkts) const {
  if (fixed.has_value()) return std::max(1, *fixed);
  const double frac = overshoot_pkts - std::floor(overshoot_pkts);
  const auto n = static_cast<int>(std::lround(aggregate_ai + frac));
  return std::max(1, n);
}

QueueSample queue_and_rtt(double total_cwnd, const LinkConfig& link) {
  QueueSample q;
  const double cap = capacity_pkts(link);
  const double bdp = bdp_pkts(link);
  q.queue_pkts = std::max(0.0, total_cwnd - bdp);
  q.rtt_s = link.base_rtt_s + q.queue_pkts / cap;
  q.utilization = bdp > 0 ? std::min(1.0, total_cwnd / bdp) : 1.0;
  return q;
}

std::optional<LossEvent> taildrop_check(double queue_pkts, const TailDropState& state,
                                        const std::vector<double>& flow_rates,
                                        double aggregate_ai, Rng& rng) {
  if (queue_pkts <= state.buffer_pkts) return std::nullopt;

  const auto n = flow_rates.size();
  LossEvent ev;
  ev.hit.assign(n, 0);
  ev.losses.assign(n, 0);

  if (state.sync_mode == TailDropState::SyncMode::AllFlowsReduce) {
    std::fill(ev.hit.begin(), ev.hit.end(), 1);
    std::fill(ev.losses.begin(), ev.losses.end(), 1);
    ev.total_losses = static_cast<int>(n);
    return ev;
  }

  const double overshoot = queue_pkts - state.buffer_pkts;
  ev.total_losses = state.losses_per_event.resolve(aggregate_ai, overshoot);
  for (int l = 0; l < ev.total_losses; ++l) {
    const int f = rng.weighted_index(flow_rates);
    ev.losses[f] += 1;
    ev.hit[f] = 1;  // reduces once regardless of hit count
  }
  return ev;
}

PieState pie_update(const PieState& state, double qdelay_s) {
  PieState next = state;
  double p = state.drop_prob;
  p += state.alpha * (qdelay_s - state.target_delay_s);
  p += state.beta * (qdelay_s - state.last_qdelay_s);
  next.drop_prob = std::clamp(p, 0.0, 1.0);
  next.last_qdelay_s = qdelay_s;
  return next;
}

std::vector<std::uint8_t> pie_mark(const PieState& state, const std::vector<double>& cwnds,
                                   const std::vector<std::uint8_t>& eligible, Rng& rng) {
  std::vector<std::uint8_t> marked(cwnds.size(), 0);
  if (state.drop_prob <= 0) return marked;
  for (std::size_t i = 0; i < cwnds.size(); ++i) {
    if (!eligible[i]) continue;
    // Probability at least one of the cwnd segments in this round is hit.
    const double p_round = 1.0 - std::pow(1.0 - state.drop_prob, cwnds[i]);
    if (rng.bernoulli(p_round)) marked[i] = 1;
  }
  return marked;
}

}  // namespace aimdsim
