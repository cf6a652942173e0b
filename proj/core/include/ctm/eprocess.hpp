#ifndef CTM_EPROCESS_HPP
#define CTM_EPROCESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace ctm {

/// log10 of the Jeffreys (Beta(1/2, 1/2)) mixture probability of a binary
/// sequence with `a` ones and `b` zeros: log10 B(a + 1/2, b + 1/2) / B(1/2, 1/2).
[[nodiscard]] double kt_log_marginal(std::uint64_t a, std::uint64_t b);

struct EProcessState {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  /// transitions[a][b]: number of a -> b transitions.
  std::array<std::array<std::uint64_t, 2>, 2> transitions{};
  std::optional<int> last_bit;
};

/// log10 of the numerator of R: 0.5 for the first bit times the Jeffreys
/// mixtures over each row of the transition matrix. This is the probability
/// of the prefix under a Markov mixture, so numerator / Ber(pi) is a test
/// martingale under Ber(pi) for every pi.
[[nodiscard]] double r_log10_numerator(const EProcessState& state);

/// Feeds bit z and returns log10 R_n, where R_n is the numerator divided by
/// the maximized Bernoulli likelihood. R is therefore dominated by
/// numerator / Ber(pi) for every pi. R_0 = 1.
[[nodiscard]] std::pair<EProcessState, double> r_step(EProcessState state, int z);

/// log10 R_n for a state without advancing it.
[[nodiscard]] double r_log10_value(const EProcessState& state);

}  // namespace ctm

#endif  // CTM_EPROCESS_HPP
