#include "ctm/boxplot.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace ctm {

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw TooFewSamplesError("quantile of an empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BoxplotStats boxplot_stats(std::span<const double> samples) {
  if (samples.size() < 5) {
    throw TooFewSamplesError("boxplot needs at least 5 samples, got " +
                             std::to_string(samples.size()));
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  BoxplotStats s{};
  s.n_samples = sorted.size();
  s.median = quantile_sorted(sorted, 0.5);
  s.q1 = quantile_sorted(sorted, 0.25);
  s.q3 = quantile_sorted(sorted, 0.75);
  const double iqr = s.q3 - s.q1;
  const double low_fence = s.q1 - 1.5 * iqr;
  const double high_fence = s.q3 + 1.5 * iqr;
  s.whisker_low = *std::lower_bound(sorted.begin(), sorted.end(), low_fence);
  s.whisker_high = *(std::upper_bound(sorted.begin(), sorted.end(), high_fence) - 1);
  const double half_notch = 1.57 * iqr / std::sqrt(static_cast<double>(s.n_samples));
  s.notch_low = s.median - half_notch;
  s.notch_high = s.median + half_notch;
  return s;
}

}  // namespace ctm
