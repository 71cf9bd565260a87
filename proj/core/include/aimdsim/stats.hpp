// Small sample-statistics helpers shared by the harness and the
// Monte-Carlo analyses.
#pragma once

#include <cstddef>
#include <vector>

namespace aimdsim {

double mean(const std::vector<double>& samples);

/// Nearest-rank percentile on a copy of the samples: element of rank
/// ceil(q * n) (1-based) of the sorted sample. q in (0, 1].
double percentile_nearest_rank(std::vector<double> samples, double q);

/// Two-sided confidence interval for the mean of a small sample, using the
/// Student-t quantile with n-1 degrees of freedom.
struct MeanCi {
  double mean = 0;
  double half_width = 0;  // 0 when the sample is constant or n < 2
  double lo() const { return mean - half_width; }
  double hi() const { return mean + half_width; }
  bool overlaps(const MeanCi& other) const {
    return lo() <= other.hi() && other.lo() <= hi();
  }
  bool contains(double x) const { return x >= lo() && x <= hi(); }
};

MeanCi mean_confidence(const std::vector<double>& samples, double confidence = 0.95);

}  // namespace aimdsim
