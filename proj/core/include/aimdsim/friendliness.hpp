// Closed-form AIMD friendliness calculus.
//
// Steady state over one sawtooth cycle: a*J = W_peak*(1-b). Requiring two
// AIMD flows with a common RTT to move the same number of segments per
// cycle (equal per-cycle window sums) fixes the peak-window ratio and the
// additive-increase factor that makes an arbitrary (a,b) flow match Reno.
// All results are exact rationals whenever the inputs are.
#pragma once

#include "aimdsim/ratio.hpp"
#include "aimdsim/types.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace aimdsim {

/// Probability mass over which flows were hit at a congestion event.
/// Keys are bitmasks over flow ids (bit i set = flow i was hit at least
/// once); masses are exact and sum to exactly 1.
class HitDistribution {
 public:
  HitDistribution() = default;
  HitDistribution(int num_flows, std::map<std::uint64_t, Ratio> mass);

  int num_flows() const { return num_flows_; }
  const std::map<std::uint64_t, Ratio>& mass() const { return mass_; }

  /// Probability of an exact hit-set; zero for sets not present.
  Ratio probability(std::uint64_t hit_mask) const;

  /// Sum of all masses (exactly 1 for a valid distribution).
  Ratio total() const;

 private:
  int num_flows_ = 0;
  std::map<std::uint64_t, Ratio> mass_;
};

/// One ordered sequence of L losses and its probability.
struct LossSequence {
  std::vector<int> flows;  // flow id of loss 1, 2, ..., L
  Ratio probability;
};

/// Result of expanding L independent losses: the ordered sequences (present
/// only when their count is tractable) and the marginal over which flows
/// reduced. A flow reduces once no matter how many of the L losses hit it.
struct MultiLossOutcome {
  std::vector<LossSequence> sequences;  // empty if n^L exceeded the cap
  HitDistribution marginal;
};

/// Peak window of a converged sawtooth: W_peak = a*J/(1-b).
/// Throws std::domain_error unless rounds >= 1, a > 0 and b in (0,1).
Ratio steady_state_peak(const Ratio& a, const Ratio& b, std::int64_t rounds);

/// Ratio of peak windows W_c/W_r for two rate-matched AIMD flows:
/// (1+b_r)/(1+b_c).
Ratio peak_window_ratio(const Ratio& b_r, const Ratio& b_c);

/// Ratio of peak packet rates r_r/r_c, the reciprocal of the peak-window
/// ratio: (1+b_c)/(1+b_r).
Ratio peak_rate_ratio(const Ratio& b_r, const Ratio& b_c);

/// Additive increase that makes an AIMD flow with decrease factor b_c match
/// the average rate of a reference (a_r, b_r) flow sharing its bottleneck:
/// a_c = a_r * (1-b_c)/(1+b_c) * (1+b_r)/(1-b_r).
Ratio ai_factor(const Ratio& a_r, const Ratio& b_r, const Ratio& b_c);

/// ai_factor specialized to a Reno reference (a=1, b=1/2):
/// a_c = 3*(1-b_c)/(1+b_c).
Ratio reno_friendly_ai(const Ratio& b_c);

/// Convenience double entry points. Inputs are converted exactly (every
/// double is a binary rational); only the final result is rounded.
double reno_friendly_ai(double b_c);
double ai_factor(double a_r, double b_r, double b_c);

/// Splits one loss among flows in proportion to their packet rates:
/// p_i = r_i / sum(r). Rates must be positive; masses sum to exactly 1.
HitDistribution single_loss_hit_probs(const std::vector<Ratio>& rates);
HitDistribution single_loss_hit_probs(const std::vector<double>& rates);

/// Expands L >= 1 independent loss draws from `single` (rates held fixed
/// during the event, draws with replacement) into ordered sequences and the
/// marginal over hit-sets. The marginal is computed by inclusion-exclusion,
/// so it stays exact for any L; sequences are enumerated only while
/// n^L <= sequence_cap.
MultiLossOutcome multi_loss_outcome_probs(const HitDistribution& single, int losses,
                                          std::uint64_t sequence_cap = 1u << 20);

/// Sum of additive-increase factors: segments per RTT the aggregate queue
/// grows while no flow is reducing.
Ratio aggregate_queue_growth(const std::vector<Ratio>& ai_factors);

}  // namespace aimdsim
