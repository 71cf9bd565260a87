#include "aimdsim/friendliness.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace aimdsim {

namespace {

void require_decrease_factor(const Ratio& b, const char* name) {
  if (!(b > 0 && b < 1)) {
    throw std::domain_error(std::string(name) + ": decrease factor out of range (0,1)");
  }
}

void require_increase_factor(const Ratio& a, const char* name) {
  if (!(a > 0)) {
    throw std::domain_error(std::string(name) + ": additive increase factor must be > 0");
  }
}

}  // namespace

HitDistribution::HitDistribution(int num_flows, std::map<std::uint64_t, Ratio> mass)
    : num_flows_(num_flows), mass_(std::move(mass)) {}

Ratio HitDistribution::probability(std::uint64_t hit_mask) const {
  auto it = mass_.find(hit_mask);
  return it == mass_.end() ? Ratio(0) : it->second;
}

Ratio HitDistribution::total() const {
  Ratio sum(0);
  for (const auto& [mask, p] : mass_) sum += p;
  return sum;
}

Ratio steady_state_peak(const Ratio& a, const Ratio& b, std::int64_t rounds) {
  require_increase_factor(a, "steady_state_peak");
  require_decrease_factor(b, "steady_state_peak");
  if (rounds < 1) {
    throw std::domain_error("steady_state_peak: cycle must have >= 1 round");
  }
  return a * rounds / (1 - b);
}

Ratio peak_window_ratio(const Ratio& b_r, const Ratio& b_c) {
  require_decrease_factor(b_r, "peak_window_ratio");
  require_decrease_factor(b_c, "peak_window_ratio");
  return (1 + b_r) / (1 + b_c);
}

Ratio peak_rate_ratio(const Ratio& b_r, const Ratio& b_c) {
  require_decrease_factor(b_r, "peak_rate_ratio");
  require_decrease_factor(b_c, "peak_rate_ratio");
  return (1 + b_c) / (1 + b_r);
}

Ratio ai_factor(const Ratio& a_r, const Ratio& b_r, const Ratio& b_c) {
  require_increase_factor(a_r, "ai_factor");
  require_decrease_factor(b_r, "ai_factor");
  require_decrease_factor(b_c, "ai_factor");
  return a_r * ((1 - b_c) / (1 + b_c)) * ((1 + b_r) / (1 - b_r));
}

Ratio reno_friendly_ai(const Ratio& b_c) {
  require_decrease_factor(b_c, "reno_friendly_ai");
  return 3 * (1 - b_c) / (1 + b_c);
}

double reno_friendly_ai(double b_c) {
  return ratio_to_double(reno_friendly_ai(ratio_from_double(b_c)));
}

double ai_factor(double a_r, double b_r, double b_c) {
  return ratio_to_double(
      ai_factor(ratio_from_double(a_r), ratio_from_double(b_r), ratio_from_double(b_c)));
}

HitDistribution single_loss_hit_probs(const std::vector<Ratio>& rates) {
  if (rates.empty()) {
    throw std::domain_error("single_loss_hit_probs: no flows");
  }
  if (rates.size() > 63) {
    throw std::domain_error("single_loss_hit_probs: too many flows for bitmask hit-sets");
  }
  Ratio total(0);
  for (const auto& r : rates) {
    if (!(r > 0)) {
      throw std::domain_error("single_loss_hit_probs: packet rates must be positive");
    }
    total += r;
  }
  std::map<std::uint64_t, Ratio> mass;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    mass[std::uint64_t(1) << i] = rates[i] / total;
  }
  return HitDistribution(static_cast<int>(rates.size()), std::move(mass));
}

HitDistribution single_loss_hit_probs(const std::vector<double>& rates) {
  std::vector<Ratio> exact;
  exact.reserve(rates.size());
  for (double r : rates) exact.push_back(ratio_from_double(r));
  return single_loss_hit_probs(exact);
}

MultiLossOutcome multi_loss_outcome_probs(const HitDistribution& single, int losses,
                                          std::uint64_t sequence_cap) {
  if (losses < 1) {
    throw std::domain_error("multi_loss_outcome_probs: loss count must be >= 1");
  }
  const int n = single.num_flows();
  if (n > 16) {
    throw std::domain_error(
        "multi_loss_outcome_probs: exact hit-set expansion is limited to 16 flows");
  }
  std::vector<Ratio> p(n, Ratio(0));
  for (const auto& [mask, prob] : single.mass()) {
    if (std::popcount(mask) != 1) {
      throw std::domain_error("multi_loss_outcome_probs: input must be a single-loss distribution");
    }
    p[std::countr_zero(mask)] = prob;
  }

  MultiLossOutcome out;

  // Marginal over hit-sets by inclusion-exclusion: the probability that the
  // hit flows are exactly S is sum over T subset of S of (-1)^|S\T| (sum of
  // p_i over T)^L. Exact for any L, no sequence enumeration needed.
  std::map<std::uint64_t, Ratio> marginal;
  const std::uint64_t full = (n >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  std::vector<Ratio> subset_rate(std::size_t(1) << n, Ratio(0));
  for (std::uint64_t s = 1; s <= full; ++s) {
    const auto low = std::uint64_t(1) << std::countr_zero(s);
    subset_rate[s] = subset_rate[s & ~low] + p[std::countr_zero(s)];
  }
  for (std::uint64_t s = 1; s <= full; ++s) {
    Ratio mass(0);
    // Iterate subsets t of s.
    std::uint64_t t = s;
    while (true) {
      const int sign = ((std::popcount(s) - std::popcount(t)) % 2 == 0) ? 1 : -1;
      mass += sign * ratio_pow(subset_rate[t], static_cast<unsigned>(losses));
      if (t == 0) break;
      t = (t - 1) & s;
    }
    if (mass != 0) marginal[s] = mass;
  }
  out.marginal = HitDistribution(n, std::move(marginal));

  // Ordered sequences, enumerated only while n^L stays small.
  double count = std::pow(static_cast<double>(n), static_cast<double>(losses));
  if (count <= static_cast<double>(sequence_cap)) {
    std::vector<int> seq(static_cast<std::size_t>(losses), 0);
    while (true) {
      Ratio prob(1);
      for (int f : seq) prob *= p[f];
      out.sequences.push_back({seq, prob});
      int pos = losses - 1;
      while (pos >= 0 && seq[pos] == n - 1) {
        seq[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++seq[pos];
    }
  }
  return out;
}

Ratio aggregate_queue_growth(const std::vector<Ratio>& ai_factors) {
  Ratio sum(0);
  for (const auto& a : ai_factors) {
    if (!(a > 0)) {
      throw std::domain_error("aggregate_queue_growth: additive increase factor must be > 0");
    }
    sum += a;
  }
  return sum;
}

}  // namespace aimdsim
