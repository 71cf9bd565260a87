#include "aimdsim/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aimdsim {

Simulation::Simulation(const SimConfig& config)
    : config_(config), rng_(config.seed), pie_(config.bottleneck.pie) {
  const auto& sc = config_.scenario;
  if (sc.total_flows < 1) {
    throw ConfigError("simulation needs a validated scenario with at least one flow");
  }
  if (config_.max_rounds < 1) {
    throw ConfigError("max_rounds must be >= 1");
  }
  if (!(config_.convergence_epsilon > 0)) {
    throw ConfigError("convergence epsilon must be > 0");
  }
  if (!config_.initial_cwnd.empty() &&
      config_.initial_cwnd.size() != static_cast<std::size_t>(sc.total_flows)) {
    throw ConfigError("initial_cwnd length does not match flow count");
  }
  flows_.reserve(sc.total_flows);
  for (int i = 0; i < sc.total_flows; ++i) {
    FlowState f;
    f.kind = sc.flow_kind[i];
    f.params = sc.flow_params[i];
    f.cwnd = config_.initial_cwnd.empty() ? 1.0 : config_.initial_cwnd[i];
    if (!(f.cwnd > 0)) throw ConfigError("initial cwnd must be > 0");
    flows_.push_back(std::move(f));
  }
  trace_.num_flows = sc.total_flows;
  trace_.cumulative_pkts.assign(sc.total_flows, 0.0);
}

const RoundRecord& Simulation::step() {
  const auto& sc = config_.scenario;
  const int n = sc.total_flows;

  current_ = RoundRecord{};
  current_.j = round_;
  current_.t_start_s = trace_.total_time_s;
  current_.cwnd.resize(n);
  current_.rate_pps.resize(n);
  current_.losses.assign(n, 0);
  current_.reduced.assign(n, 0);

  // Apply pending reductions, grow everyone else.
  for (int i = 0; i < n; ++i) {
    auto& f = flows_[i];
    if (f.pending_reduction) {
      f.cwnd *= f.params.b;
      f.pending_reduction = false;
      current_.reduced[i] = 1;
    } else {
      f.cwnd += f.params.a;
    }
    current_.cwnd[i] = f.cwnd;
  }

  double total_cwnd = 0;
  for (int i = 0; i < n; ++i) total_cwnd += flows_[i].cwnd;
  const QueueSample qs = queue_and_rtt(total_cwnd, sc.link);
  current_.queue_pkts = qs.queue_pkts;
  current_.rtt_s = qs.rtt_s;
  for (int i = 0; i < n; ++i) current_.rate_pps[i] = flows_[i].cwnd / qs.rtt_s;

  // Bottleneck check marks flows for the next round.
  if (config_.bottleneck.kind == BottleneckConfig::Kind::TailDrop) {
    TailDropState td;
    td.buffer_pkts = sc.buffer;
    td.sync_mode = config_.bottleneck.sync_mode;
    td.losses_per_event = config_.bottleneck.losses_per_event;
    auto event = taildrop_check(qs.queue_pkts, td, current_.rate_pps, sc.aggregate_ai(), rng_);
    if (event) {
      current_.congestion_event = true;
      current_.losses = event->losses;
      for (int i = 0; i < n; ++i) {
        if (event->hit[i]) flows_[i].pending_reduction = true;
      }
    }
  } else {
    // Controller steps on its own clock; a long round can span several
    // update intervals.
    pie_clock_s_ += qs.rtt_s;
    const double qdelay = qs.queue_pkts / sc.capacity_pps;
    while (pie_clock_s_ >= pie_.update_interval_s) {
      pie_clock_s_ -= pie_.update_interval_s;
      pie_ = pie_update(pie_, qdelay);
    }
    std::vector<std::uint8_t> eligible(n);
    for (int i = 0; i < n; ++i) eligible[i] = current_.reduced[i] ? 0 : 1;
    auto marked = pie_mark(pie_, current_.cwnd, eligible, rng_);
    for (int i = 0; i < n; ++i) {
      if (marked[i]) {
        flows_[i].pending_reduction = true;
        current_.losses[i] = 1;
        current_.congestion_event = true;
      }
    }
  }

  // Accounting: a flow moves one window per round in the fluid model.
  for (int i = 0; i < n; ++i) trace_.cumulative_pkts[i] += flows_[i].cwnd;
  trace_.total_time_s += qs.rtt_s;

  if (current_.congestion_event) {
    trace_.event_rounds.push_back(round_);
    if (!trace_.converged && deterministic()) {
      if (!last_event_cwnd_.empty()) {
        bool same = true;
        for (int i = 0; i < n; ++i) {
          const double scale = std::max(std::abs(last_event_cwnd_[i]), std::abs(current_.cwnd[i]));
          if (std::abs(current_.cwnd[i] - last_event_cwnd_[i]) >
              config_.convergence_epsilon * scale) {
            same = false;
            break;
          }
        }
        if (same) {
          trace_.converged = true;
          trace_.converged_round = round_;
        }
      }
      last_event_cwnd_ = current_.cwnd;
    }
  }

  if (config_.record_trace) trace_.rounds.push_back(current_);
  ++round_;
  return current_;
}

Trace run(const SimConfig& config) {
  Simulation sim(config);
  while (sim.round() < config.max_rounds) {
    sim.step();
    if (sim.converged()) break;
  }
  return sim.take_trace();
}

std::vector<CycleStats> detect_cycles(const Trace& trace, const Scenario& scenario) {
  if (trace.event_rounds.size() < 2) {
    throw std::runtime_error("no complete cycle observed");
  }
  if (trace.rounds.empty()) {
    throw std::runtime_error("cycle detection needs a recorded trace");
  }
  const int n = trace.num_flows;
  std::vector<CycleStats> cycles;
  for (std::size_t e = 1; e < trace.event_rounds.size(); ++e) {
    const std::int64_t from = trace.event_rounds[e - 1] + 1;  // trough round
    const std::int64_t to = trace.event_rounds[e];            // peak/event round
    CycleStats cs;
    cs.rounds = to - from;  // growth rounds within the cycle
    cs.peak_cwnd = trace.rounds[static_cast<std::size_t>(to)].cwnd;
    cs.packets_per_cycle.assign(n, 0.0);
    cs.duration_s = 0;
    for (std::int64_t j = from; j <= to; ++j) {
      const auto& r = trace.rounds[static_cast<std::size_t>(j)];
      for (int i = 0; i < n; ++i) cs.packets_per_cycle[i] += r.cwnd[i];
      cs.duration_s += r.rtt_s;
    }
    cs.normalized_rate.resize(n);
    const double fair_pps = scenario.capacity_pps / scenario.total_flows;
    for (int i = 0; i < n; ++i) {
      cs.normalized_rate[i] = cs.packets_per_cycle[i] / cs.duration_s / fair_pps;
    }
    cycles.push_back(std::move(cs));
  }
  return cycles;
}

CycleStats detect_cycle(const Trace& trace, const Scenario& scenario) {
  auto cycles = detect_cycles(trace, scenario);
  return cycles.back();
}

std::vector<std::vector<double>> normalized_rates(const Trace& trace, const LinkConfig& link,
                                                  int total_flows, double start_s,
                                                  double interval_s, int count) {
  if (!(interval_s > 0) || count < 1) {
    throw ConfigError("sampling needs a positive interval and at least one sample");
  }
  if (trace.rounds.empty()) {
    throw std::runtime_error("rate sampling needs a recorded trace");
  }
  const int n = trace.num_flows;
  const double fair_pps = capacity_pkts(link) / total_flows;
  std::vector<std::vector<double>> samples(n, std::vector<double>(count, 0.0));

  const double end_s = start_s + interval_s * count;
  for (const auto& r : trace.rounds) {
    const double r0 = r.t_start_s;
    const double r1 = r.t_start_s + r.rtt_s;
    if (r1 <= start_s || r0 >= end_s) continue;
    // Spread the round's delivery over the bins it overlaps.
    int bin = static_cast<int>(std::floor((std::max(r0, start_s) - start_s) / interval_s));
    for (; bin < count; ++bin) {
      const double b0 = start_s + bin * interval_s;
      const double b1 = b0 + interval_s;
      if (b0 >= r1) break;
      const double overlap = std::min(r1, b1) - std::max(r0, b0);
      if (overlap <= 0) continue;
      for (int i = 0; i < n; ++i) {
        samples[i][bin] += r.cwnd[i] * (overlap / r.rtt_s);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < count; ++k) {
      samples[i][k] = samples[i][k] / interval_s / fair_pps;
    }
  }
  return samples;
}

}  // namespace aimdsim
