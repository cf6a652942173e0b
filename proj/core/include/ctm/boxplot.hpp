#ifndef CTM_BOXPLOT_HPP
#define CTM_BOXPLOT_HPP

#include <cstddef>
#include <span>
#include <stdexcept>

namespace ctm {

class TooFewSamplesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Notched-boxplot summary. Quartiles use linear interpolation between order
/// statistics; whiskers reach the most extreme samples within 1.5 IQR of the
/// box; the notch is median +- 1.57 IQR / sqrt(n).
struct BoxplotStats {
  double median;
  double q1;
  double q3;
  double whisker_low;
  double whisker_high;
  double notch_low;
  double notch_high;
  std::size_t n_samples;
};

/// Linear-interpolation quantile of sorted data, q in [0, 1].
[[nodiscard]] double quantile_sorted(std::span<const double> sorted, double q);

/// Requires at least 5 samples.
[[nodiscard]] BoxplotStats boxplot_stats(std::span<const double> samples);

}  // namespace ctm

#endif  // CTM_BOXPLOT_HPP
