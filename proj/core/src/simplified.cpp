#include "ctm/simplified.hpp"

namespace ctm {

StepFunction simplified_betting_function(const MarkovParams& params, int j) {
  const double low = 2.0 * params.prob_one_after(j);
  const double high = 2.0 * params.prob_zero_after(j);
  return StepFunction::right_closed({0.0, 0.5, 1.0}, {low, high});
}

SimplifiedStep simplified_bk_step(std::optional<PValue> prev_p, const MarkovParams& params,
                                  PValue p) {
  if (!prev_p) return {1.0, p};
  const int j = prev_p->value() <= 0.5 ? 1 : 0;
  const double factor =
      p.value() <= 0.5 ? 2.0 * params.prob_one_after(j) : 2.0 * params.prob_zero_after(j);
  return {factor, p};
}

}  // namespace ctm
