// Shared domain types for the analytic, simulation, and statistical layers.
//
// Unit discipline: every internal quantity is in segments (packets) and
// seconds. Bits and bytes appear only in LinkConfig / BufferPolicy, which
// describe the configuration boundary.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace aimdsim {

/// Thrown when a scenario or config file fails validation.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// One flow's additive-increase / multiplicative-decrease pair.
/// a: segments added per round trip; b: window factor kept on congestion.
struct AimdParams {
  double a = 1.0;  // > 0
  double b = 0.5;  // in (0,1)
};

/// Congestion-control family label. Reno pins (a,b) = (1, 1/2); CReno is the
/// Reno-friendly AIMD with a derived additive increase; Custom carries any
/// experimental AIMD pair under a free-form tag.
struct CcaKind {
  enum class Family { Reno, CReno, Custom };
  Family family = Family::Reno;
  std::string tag;  // free-form label for experiments; defaults per family

  std::string label() const;

  static CcaKind reno() { return {Family::Reno, "reno"}; }
  static CcaKind creno() { return {Family::CReno, "creno"}; }
  static CcaKind custom(std::string tag) { return {Family::Custom, std::move(tag)}; }
};

/// Bottleneck buffer size: either a time horizon (B = C * horizon / 8 bytes,
/// the sizing rule used for the experiment grids) or a fixed packet count.
struct BufferPolicy {
  struct SizedByTime {
    double horizon_s = 0.2;
  };
  struct SizedByPackets {
    std::int64_t count = 100;
  };
  std::variant<SizedByTime, SizedByPackets> mode = SizedByTime{};

  static BufferPolicy by_time(double horizon_s) { return {SizedByTime{horizon_s}}; }
  static BufferPolicy by_packets(std::int64_t count) { return {SizedByPackets{count}}; }

  bool is_time_sized() const { return std::holds_alternative<SizedByTime>(mode); }
};

/// Bottleneck link description.
struct LinkConfig {
  double capacity_bps = 40e6;   // > 0
  std::int64_t mss_bytes = 1500;  // > 0
  double base_rtt_s = 0.01;     // > 0, two-way base delay
  BufferPolicy buffer;
};

/// capacity / (8 * mss): link rate in whole segments per second.
double capacity_pkts(const LinkConfig& link);

/// capacity_pkts * base_rtt: the queue-free in-flight budget, in segments.
double bdp_pkts(const LinkConfig& link);

/// Buffer depth in segments (real-valued; the fluid model does not
/// quantize the brim). Time-sized policies use B = C * horizon / 8 bytes.
double buffer_pkts(const LinkConfig& link);

/// A group of identical flows in a scenario.
struct FlowGroup {
  CcaKind kind;
  AimdParams params;
  int count = 1;
};

/// Per-flow running state inside the simulator.
struct FlowState {
  CcaKind kind;
  AimdParams params;
  double cwnd = 1.0;  // segments, > 0
  bool pending_reduction = false;
};

/// One simulated round trip: window state, queue, RTT and rates for every
/// flow, plus the loss events the bottleneck signalled during the round.
struct RoundRecord {
  std::int64_t j = 0;    // round index
  double t_start_s = 0;  // cumulative simulated time at round start
  std::vector<double> cwnd;         // per flow, segments
  double queue_pkts = 0;            // backlog, >= 0
  double rtt_s = 0;                 // >= base RTT
  std::vector<double> rate_pps;     // per flow, segments/second
  std::vector<std::int32_t> losses; // per flow, losses assigned this round
  std::vector<std::uint8_t> reduced;  // per flow, 1 if a reduction was applied
  bool congestion_event = false;      // bottleneck signalled this round
};

/// Converged (or sampled) sawtooth cycle statistics.
struct CycleStats {
  std::int64_t rounds = 0;  // J: growth rounds per sawtooth cycle
  std::vector<double> peak_cwnd;          // per flow, segments
  std::vector<double> packets_per_cycle;  // per flow, sum of cwnd over the cycle
  double duration_s = 0;                  // sum of round RTTs over the cycle
  std::vector<double> normalized_rate;    // per flow, vs 1/N of capacity
};

/// A validated scenario: the link plus the expanded per-flow list, with the
/// derived quantities every consumer needs precomputed.
struct Scenario {
  LinkConfig link;
  std::vector<FlowGroup> groups;

  // Derived on validation.
  double capacity_pps = 0;
  double bdp = 0;          // segments
  double buffer = 0;       // segments
  int total_flows = 0;

  // Flattened flow list; flow id is the index.
  std::vector<CcaKind> flow_kind;
  std::vector<AimdParams> flow_params;
  std::vector<int> flow_group;  // flow id -> group index

  /// Sum of additive-increase factors: queue growth in segments per RTT
  /// while no flow is reducing.
  double aggregate_ai() const;
};

/// Checks every invariant (a > 0, b in (0,1), positive capacity/mss/RTT,
/// buffer >= 1 packet, Reno label implies (1, 1/2), at least one flow) and
/// returns the scenario with derived quantities filled in.
/// Throws ConfigError with a distinct diagnostic per violation.
Scenario validate_scenario(const LinkConfig& link, const std::vector<FlowGroup>& groups);

}  // namespace aimdsim
