#ifndef CTM_STEP_FUNCTION_HPP
#define CTM_STEP_FUNCTION_HPP

#include <cstddef>
#include <vector>

namespace ctm {

/// Piecewise-constant function on [0, 1].
///
/// `breakpoints` increase from 0 to 1; `interval_values[i]` is the value on
/// the open interval (breakpoints[i], breakpoints[i + 1]); `point_values[i]` is
/// the value exactly at breakpoints[i]. Point values do not affect integrals
/// but fix which side an indicator is closed on.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> interval_values,
               std::vector<double> point_values);

  /// Step function whose breakpoint values equal the interval to the left
  /// (at 0: the first interval), i.e. intervals closed on the right.
  static StepFunction right_closed(std::vector<double> breakpoints,
                                   std::vector<double> interval_values);

  [[nodiscard]] double operator()(double p) const;
  [[nodiscard]] double integral() const;

  [[nodiscard]] const std::vector<double>& breakpoints() const { return breakpoints_; }
  [[nodiscard]] const std::vector<double>& interval_values() const { return interval_values_; }
  [[nodiscard]] const std::vector<double>& point_values() const { return point_values_; }
  [[nodiscard]] std::size_t intervals() const { return interval_values_.size(); }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> interval_values_;
  std::vector<double> point_values_;
};

}  // namespace ctm

#endif  // CTM_STEP_FUNCTION_HPP
