#include "aimdsim/types.hpp"

#include <cmath>
#include <sstream>

namespace aimdsim {

std::string CcaKind::label() const {
  if (!tag.empty()) return tag;
  switch (family) {
    case Family::Reno:
      return "reno";
    case Family::CReno:
      return "creno";
    case Family::Custom:
      return "custom";
  }
  return "custom";
}

double capacity_pkts(const LinkConfig& link) {
  return link.capacity_bps / (8.0 * static_cast<double>(link.mss_bytes));
}

double bdp_pkts(const LinkConfig& link) { return capacity_pkts(link) * link.base_rtt_s; }

double buffer_pkts(const LinkConfig& link) {
  if (const auto* t = std::get_if<BufferPolicy::SizedByTime>(&link.buffer.mode)) {
    // B [byte] = C * horizon / 8, then to segments.
    return link.capacity_bps * t->horizon_s / 8.0 / static_cast<double>(link.mss_bytes);
  }
  return static_cast<double>(std::get<BufferPolicy::SizedByPackets>(link.buffer.mode).count);
}

double Scenario::aggregate_ai() const {
  double sum = 0;
  for (const auto& p : flow_params) sum += p.a;
  return sum;
}

namespace {

void check_params(const CcaKind& kind, const AimdParams& p, int group_index) {
  std::ostringstream where;
  where << "flow group " << group_index << " (" << kind.label() << ")";
  if (!(p.a > 0) || !std::isfinite(p.a)) {
    throw ConfigError(where.str() + ": additive increase factor must be > 0");
  }
  if (!(p.b > 0 && p.b < 1)) {
    throw ConfigError(where.str() + ": decrease factor out of range (0,1)");
  }
  if (kind.family == CcaKind::Family::Reno && (p.a != 1.0 || p.b != 0.5)) {
    throw ConfigError(where.str() + ": Reno requires a=1, b=1/2");
  }
}

}  // namespace

Scenario validate_scenario(const LinkConfig& link, const std::vector<FlowGroup>& groups) {
  if (!(link.capacity_bps > 0) || !std::isfinite(link.capacity_bps)) {
    throw ConfigError("link capacity must be positive");
  }
  if (link.mss_bytes <= 0) {
    throw ConfigError("segment size must be positive");
  }
  if (!(link.base_rtt_s > 0) || !std::isfinite(link.base_rtt_s)) {
    throw ConfigError("base RTT must be positive");
  }
  if (const auto* t = std::get_if<BufferPolicy::SizedByTime>(&link.buffer.mode)) {
    if (!(t->horizon_s > 0)) throw ConfigError("buffer time horizon must be positive");
  }

  Scenario s;
  s.link = link;
  s.groups = groups;
  s.capacity_pps = capacity_pkts(link);
  s.bdp = bdp_pkts(link);
  s.buffer = buffer_pkts(link);
  if (s.buffer < 1.0) {
    throw ConfigError("buffer smaller than one segment");
  }

  if (groups.empty()) {
    throw ConfigError("scenario has no flows");
  }
  int gi = 0;
  for (const auto& g : groups) {
    if (g.count < 1) {
      std::ostringstream os;
      os << "flow group " << gi << ": count must be >= 1";
      throw ConfigError(os.str());
    }
    check_params(g.kind, g.params, gi);
    for (int i = 0; i < g.count; ++i) {
      s.flow_kind.push_back(g.kind);
      s.flow_params.push_back(g.params);
      s.flow_group.push_back(gi);
    }
    ++gi;
  }
  s.total_flows = static_cast<int>(s.flow_kind.size());
  return s;
}

}  // namespace aimdsim
