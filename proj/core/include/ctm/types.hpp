#ifndef CTM_TYPES_HPP
#define CTM_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

namespace ctm {

/// A binary observation stream. Each element is 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Transition probabilities of a binary Markov chain. The first observation
/// is 1 with probability 0.5. Both transition probabilities must lie in the
/// open unit interval.
class MarkovParams {
 public:
  MarkovParams(double pi_1_given_0, double pi_1_given_1);

  static MarkovParams hard() { return {0.4, 0.6}; }
  static MarkovParams easy() { return {0.1, 0.9}; }
  /// Resolves "hard" or "easy"; throws std::invalid_argument otherwise.
  static MarkovParams preset(std::string_view name);

  [[nodiscard]] double pi_1_given_0() const { return pi_1_given_0_; }
  [[nodiscard]] double pi_1_given_1() const { return pi_1_given_1_; }
  [[nodiscard]] static constexpr double first_prob_one() { return 0.5; }

  /// Probability that the next bit is 1 given the previous bit `prev`.
  [[nodiscard]] double prob_one_after(int prev) const {
    return prev ? pi_1_given_1_ : pi_1_given_0_;
  }
  [[nodiscard]] double prob_zero_after(int prev) const { return 1.0 - prob_one_after(prev); }
  /// Probability of the transition prev -> next.
  [[nodiscard]] double transition(int prev, int next) const {
    return next ? prob_one_after(prev) : prob_zero_after(prev);
  }

  friend bool operator==(const MarkovParams&, const MarkovParams&) = default;

 private:
  double pi_1_given_0_;
  double pi_1_given_1_;
};

/// Data drawn i.i.d. from Bernoulli(pi); used to run processes under the null.
struct BernoulliLaw {
  double pi = 0.5;
  friend bool operator==(const BernoulliLaw&, const BernoulliLaw&) = default;
};

/// Law generating the observed bits: the Markov alternative itself, or a
/// Bernoulli null.
using DataLaw = std::variant<MarkovParams, BernoulliLaw>;

/// Scenario lengths: large = 10^4, medium = 10^3, small = 10^2.
[[nodiscard]] std::size_t scenario_length(std::string_view name);

struct Scenario {
  std::size_t n_steps;
  /// Alternative the betting processes and benchmarks are tuned to.
  MarkovParams alternative;
  DataLaw data_law;
  std::uint64_t seed = 2021;

  /// Scenario whose data come from the alternative itself.
  static Scenario markov(std::size_t n_steps, MarkovParams alternative, std::uint64_t seed = 2021);
};

/// Randomized conformal p-value; always strictly inside (0, 1).
class PValue {
 public:
  explicit PValue(double value);
  [[nodiscard]] double value() const { return value_; }
  friend bool operator==(const PValue&, const PValue&) = default;

 private:
  double value_;
};

}  // namespace ctm

#endif  // CTM_TYPES_HPP
