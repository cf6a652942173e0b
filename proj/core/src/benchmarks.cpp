#include "ctm/benchmarks.hpp"

#include <cmath>

namespace ctm {

namespace {

double xlog10(double count, double prob) { return count == 0.0 ? 0.0 : count * std::log10(prob); }

}  // namespace

std::pair<BenchmarkState, double> ub_step(BenchmarkState state, const MarkovParams& params,
                                          int z) {
  z = z ? 1 : 0;
  const double prob = state.last_bit ? params.transition(*state.last_bit, z)
                                     : (z ? MarkovParams::first_prob_one()
                                          : 1.0 - MarkovParams::first_prob_one());
  if (state.last_bit) {
    ++state.transitions[static_cast<std::size_t>(*state.last_bit)][static_cast<std::size_t>(z)];
  } else {
    state.first_bit = z;
  }
  state.last_bit = z;
  ++state.n;
  state.k += static_cast<std::uint64_t>(z);
  const double log_prob = std::log10(prob);
  state.log10_markov += log_prob;
  return {state, log_prob - std::log10(0.5)};
}

double log10_bernoulli_likelihood(std::uint64_t n, std::uint64_t k, double pi) {
  const double ones = static_cast<double>(k);
  const double zeros = static_cast<double>(n - k);
  return xlog10(ones, pi) + xlog10(zeros, 1.0 - pi);
}

double log10_bernoulli_mle_likelihood(std::uint64_t n, std::uint64_t k) {
  if (n == 0) return 0.0;
  const double nd = static_cast<double>(n);
  const double ones = static_cast<double>(k);
  const double zeros = static_cast<double>(n - k);
  return xlog10(ones, ones / nd) + xlog10(zeros, zeros / nd);
}

LogCapital lb_value(const BenchmarkState& state) {
  return LogCapital(state.log10_markov - log10_bernoulli_mle_likelihood(state.n, state.k));
}

}  // namespace ctm
