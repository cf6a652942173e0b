#include "ctm/eprocess.hpp"

#include <cmath>
#include <numbers>

#include "ctm/benchmarks.hpp"

namespace ctm {

double kt_log_marginal(std::uint64_t a, std::uint64_t b) {
  const double ad = static_cast<double>(a);
  const double bd = static_cast<double>(b);
  // B(1/2, 1/2) = pi.
  const double ln = std::lgamma(ad + 0.5) + std::lgamma(bd + 0.5) - std::lgamma(ad + bd + 1.0) -
                    std::log(std::numbers::pi);
  return ln / std::numbers::ln10;
}

double r_log10_numerator(const EProcessState& state) {
  if (state.n == 0) return 0.0;
  const auto& t = state.transitions;
  return std::log10(0.5) + kt_log_marginal(t[0][1], t[0][0]) + kt_log_marginal(t[1][1], t[1][0]);
}

double r_log10_value(const EProcessState& state) {
  return r_log10_numerator(state) - log10_bernoulli_mle_likelihood(state.n, state.k);
}

std::pair<EProcessState, double> r_step(EProcessState state, int z) {
  z = z ? 1 : 0;
  if (state.last_bit) {
    ++state.transitions[static_cast<std::size_t>(*state.last_bit)][static_cast<std::size_t>(z)];
  }
  state.last_bit = z;
  ++state.n;
  state.k += static_cast<std::uint64_t>(z);
  return {state, r_log10_value(state)};
}

}  // namespace ctm
