#include "ctm/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctm {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> interval_values,
                           std::vector<double> point_values)
    : breakpoints_(std::move(breakpoints)),
      interval_values_(std::move(interval_values)),
      point_values_(std::move(point_values)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw std::invalid_argument("step function breakpoints must run from 0 to 1");
  }
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
      std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end()) {
    throw std::invalid_argument("step function breakpoints must be strictly increasing");
  }
  if (interval_values_.size() + 1 != breakpoints_.size() ||
      point_values_.size() != breakpoints_.size()) {
    throw std::invalid_argument("step function value counts do not match breakpoints");
  }
}

StepFunction StepFunction::right_closed(std::vector<double> breakpoints,
                                        std::vector<double> interval_values) {
  std::vector<double> points;
  points.reserve(breakpoints.size());
  if (!interval_values.empty()) {
    points.push_back(interval_values.front());
    points.insert(points.end(), interval_values.begin(), interval_values.end());
  }
  return StepFunction(std::move(breakpoints), std::move(interval_values), std::move(points));
}

double StepFunction::operator()(double p) const {
  if (p < 0.0 || p > 1.0) return 0.0;
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), p);
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (*it == p) return point_values_[idx];
  return interval_values_[idx - 1];
}

double StepFunction::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i < interval_values_.size(); ++i) {
    total += interval_values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
  return total;
}

}  // namespace ctm
