#ifndef CTM_SIMPLIFIED_HPP
#define CTM_SIMPLIFIED_HPP

#include <cstdint>
#include <optional>

#include "ctm/log_capital.hpp"
#include "ctm/step_function.hpp"
#include "ctm/types.hpp"

namespace ctm {

struct SimplifiedStep {
  double factor;
  /// The current p-value, to be passed as `prev_p` on the next step.
  PValue carry;
};

/// Simplified Bayes-Kelly betting function for surrogate last bit j:
/// 2*pi_{1|j} on [0, 0.5] and 2*pi_{0|j} on (0.5, 1].
[[nodiscard]] StepFunction simplified_betting_function(const MarkovParams& params, int j);

/// One O(1) step. The surrogate last bit is j = 1{prev_p <= 0.5}; with no
/// previous p-value the factor is 1.
[[nodiscard]] SimplifiedStep simplified_bk_step(std::optional<PValue> prev_p,
                                                const MarkovParams& params, PValue p);

class SimplifiedBayesKellyMartingale {
 public:
  explicit SimplifiedBayesKellyMartingale(MarkovParams params) : params_(params) {}

  double step(PValue p) {
    const SimplifiedStep s = simplified_bk_step(prev_, params_, p);
    prev_ = s.carry;
    capital_.add_factor(s.factor);
    ++operations_;
    return s.factor;
  }

  [[nodiscard]] LogCapital capital() const { return capital_; }
  /// One unit per step.
  [[nodiscard]] std::uint64_t operations() const { return operations_; }

 private:
  MarkovParams params_;
  std::optional<PValue> prev_;
  LogCapital capital_;
  std::uint64_t operations_ = 0;
};

}  // namespace ctm

#endif  // CTM_SIMPLIFIED_HPP
