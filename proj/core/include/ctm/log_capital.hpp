#ifndef CTM_LOG_CAPITAL_HPP
#define CTM_LOG_CAPITAL_HPP

#include <cmath>
#include <limits>

namespace ctm {

/// Base-10 logarithm of the value of a capital process.
///
/// Every test process in the library (martingales, benchmarks, e-process) is
/// tracked in this form only; the linear value of a long easy-case run is
/// around 10^1600, so it is never exponentiated. A value of -inf is the
/// bankrupt state and absorbs every later factor.
class LogCapital {
 public:
  constexpr LogCapital() = default;
  constexpr explicit LogCapital(double log10_value) : log10_value_(log10_value) {}

  [[nodiscard]] constexpr double log10_value() const { return log10_value_; }
  [[nodiscard]] bool bankrupt() const { return std::isinf(log10_value_) && log10_value_ < 0; }

  /// Multiplies the capital by `factor` (>= 0). A zero factor bankrupts.
  LogCapital& add_factor(double factor);

  /// Adds an increment already expressed in log10 units.
  LogCapital& add_log10(double increment) {
    if (!bankrupt()) log10_value_ += increment;
    return *this;
  }

  friend bool operator==(const LogCapital&, const LogCapital&) = default;

 private:
  double log10_value_ = 0.0;
};

/// Returns `capital * factor` in log space.
[[nodiscard]] LogCapital log10_add_factor(LogCapital capital, double factor);

}  // namespace ctm

#endif  // CTM_LOG_CAPITAL_HPP
