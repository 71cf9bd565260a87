#include "aimdsim/stats.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aimdsim {

double mean(const std::vector<double>& samples) {
  if (samples.empty()) throw std::domain_error("mean of empty sample");
  double sum = 0;
  for (double s : samples) sum += s;
  return sum / static_cast<double>(samples.size());
}

double percentile_nearest_rank(std::vector<double> samples, double q) {
  if (samples.empty()) throw std::domain_error("percentile of empty sample");
  if (!(q > 0 && q <= 1)) throw std::domain_error("percentile rank must be in (0,1]");
  std::sort(samples.begin(), samples.end());
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(samples.size())));
  if (rank < 1) rank = 1;
  return samples[rank - 1];
}

MeanCi mean_confidence(const std::vector<double>& samples, double confidence) {
  MeanCi ci;
  ci.mean = mean(samples);
  const auto n = samples.size();
  if (n < 2) return ci;
  double ss = 0;
  for (double s : samples) ss += (s - ci.mean) * (s - ci.mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0) return ci;
  boost::math::students_t dist(static_cast<double>(n - 1));
  const double t = boost::math::quantile(dist, 0.5 + confidence / 2);
  ci.half_width = t * sd / std::sqrt(static_cast<double>(n));
  return ci;
}

}  // namespace aimdsim
