#include "ctm/simple_jumper.hpp"

#include <stdexcept>

namespace ctm {

namespace {

void check_rate(double jump_rate) {
  if (!(jump_rate >= 0.0 && jump_rate <= 1.0)) {
    throw std::invalid_argument("Simple Jumper jump rate must lie in [0, 1]");
  }
}

}  // namespace

double simple_jumper_bet_integral(int eps, double a, double b) {
  auto antiderivative = [eps](double x) { return x + eps * (0.5 * x * x - 0.5 * x); };
  return antiderivative(b) - antiderivative(a);
}

std::pair<SimpleJumperState, double> simple_jumper_step(SimpleJumperState state, PValue p) {
  check_rate(state.jump_rate);
  const double before = state.total();
  const double spread = state.jump_rate / 3.0 * before;
  double after = 0.0;
  for (int eps = -1; eps <= 1; ++eps) {
    double& c = state.capital_per_state[static_cast<std::size_t>(eps + 1)];
    c = (1.0 - state.jump_rate) * c + spread;
    c *= simple_jumper_bet(eps, p.value());
    after += c;
  }
  return {state, before > 0.0 ? after / before : 0.0};
}

SimpleJumperMartingale::SimpleJumperMartingale(double jump_rate) {
  check_rate(jump_rate);
  state_.jump_rate = jump_rate;
}

double SimpleJumperMartingale::step(PValue p) {
  auto [next, factor] = simple_jumper_step(state_, p);
  const double total = next.total();
  for (double& c : next.capital_per_state) c /= total;
  state_ = next;
  capital_.add_factor(factor);
  return factor;
}

}  // namespace ctm
