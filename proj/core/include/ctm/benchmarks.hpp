#ifndef CTM_BENCHMARKS_HPP
#define CTM_BENCHMARKS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "ctm/log_capital.hpp"
#include "ctm/types.hpp"

namespace ctm {

/// Sufficient statistics of a bit prefix for the likelihood-ratio benchmarks.
struct BenchmarkState {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  /// transitions[a][b]: number of a -> b transitions.
  std::array<std::array<std::uint64_t, 2>, 2> transitions{};
  std::optional<int> first_bit;
  std::optional<int> last_bit;
  /// log10 of the Markov alternative's probability of the prefix.
  double log10_markov = 0.0;
};

/// Feeds bit z. The increment is log10 of the Markov probability of z (0.5
/// for the first bit) minus log10(0.5), i.e. the log10 factor of the upper
/// benchmark UB = Markov / Ber(0.5).
[[nodiscard]] std::pair<BenchmarkState, double> ub_step(BenchmarkState state,
                                                        const MarkovParams& params, int z);

/// Lower benchmark Markov / Ber(k/n), evaluated in closed form from the
/// sufficient statistics (0 log 0 = 0). LB_0 = 1.
[[nodiscard]] LogCapital lb_value(const BenchmarkState& state);

/// log10 of the maximized Bernoulli likelihood (k/n)^k ((n-k)/n)^(n-k).
[[nodiscard]] double log10_bernoulli_mle_likelihood(std::uint64_t n, std::uint64_t k);

/// log10 of pi^k (1-pi)^(n-k), with 0 log 0 = 0.
[[nodiscard]] double log10_bernoulli_likelihood(std::uint64_t n, std::uint64_t k, double pi);

/// Both benchmarks tracked together.
class BenchmarkTracker {
 public:
  explicit BenchmarkTracker(MarkovParams params) : params_(params) {}

  void push(int z) {
    auto [next, increment] = ub_step(state_, params_, z);
    state_ = next;
    upper_.add_log10(increment);
  }

  [[nodiscard]] LogCapital upper() const { return upper_; }
  [[nodiscard]] LogCapital lower() const { return lb_value(state_); }
  [[nodiscard]] const BenchmarkState& state() const { return state_; }

 private:
  MarkovParams params_;
  BenchmarkState state_;
  LogCapital upper_;
};

}  // namespace ctm

#endif  // CTM_BENCHMARKS_HPP
