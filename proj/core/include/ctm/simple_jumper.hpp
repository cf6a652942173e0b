#ifndef CTM_SIMPLE_JUMPER_HPP
#define CTM_SIMPLE_JUMPER_HPP

#include <array>
#include <utility>

#include "ctm/log_capital.hpp"
#include "ctm/types.hpp"

namespace ctm {

/// Capital held by each betting state eps in {-1, 0, 1} (index eps + 1) of
/// the Simple Jumper, with jump rate J in [0, 1].
struct SimpleJumperState {
  std::array<double, 3> capital_per_state{1.0 / 3, 1.0 / 3, 1.0 / 3};
  double jump_rate = 0.01;

  [[nodiscard]] double total() const {
    return capital_per_state[0] + capital_per_state[1] + capital_per_state[2];
  }
};

/// Betting function of state eps: f(p) = 1 + eps * (p - 0.5).
[[nodiscard]] constexpr double simple_jumper_bet(int eps, double p) { return 1.0 + eps * (p - 0.5); }

/// Integral of simple_jumper_bet(eps, .) over [a, b], from its antiderivative.
[[nodiscard]] double simple_jumper_bet_integral(int eps, double a = 0.0, double b = 1.0);

/// Jump (a fraction J of the total is spread evenly over the three states),
/// then bet. Returns the new state and the ratio of total capital after to
/// before.
[[nodiscard]] std::pair<SimpleJumperState, double> simple_jumper_step(SimpleJumperState state,
                                                                      PValue p);

/// Simple Jumper test martingale. The per-state capitals are kept as
/// proportions summing to 1 and the total lives in log space.
class SimpleJumperMartingale {
 public:
  explicit SimpleJumperMartingale(double jump_rate);

  double step(PValue p);

  [[nodiscard]] LogCapital capital() const { return capital_; }
  [[nodiscard]] const SimpleJumperState& state() const { return state_; }

 private:
  SimpleJumperState state_;
  LogCapital capital_;
};

}  // namespace ctm

#endif  // CTM_SIMPLE_JUMPER_HPP
