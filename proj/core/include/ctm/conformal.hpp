#ifndef CTM_CONFORMAL_HPP
#define CTM_CONFORMAL_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ctm/random.hpp"
#include "ctm/types.hpp"

namespace ctm {

/// Running counts of the conformal transducer: n observations, k of them 1.
struct ConformalState {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  friend bool operator==(const ConformalState&, const ConformalState&) = default;
};

/// Randomized conformal p-value of bit `z` under the identity nonconformity
/// score, with tie-breaking variate `theta` in (0, 1).
///
/// With n' = n + 1 and k' = k + z the result is theta * k'/n' when z = 1 and
/// (k' + theta * (n' - k')) / n' when z = 0, so p ~ U[0, k'/n'] for a 1 and
/// p ~ U[k'/n', 1] for a 0.
[[nodiscard]] std::pair<PValue, ConformalState> next_p_value(ConformalState state, int z,
                                                             double theta);

/// Online transducer wrapping next_p_value.
class ConformalTransducer {
 public:
  PValue push(int z, double theta) {
    auto [p, next] = next_p_value(state_, z, theta);
    state_ = next;
    return p;
  }
  [[nodiscard]] const ConformalState& state() const { return state_; }

 private:
  ConformalState state_;
};

/// p-values for a whole stream, one fresh theta from `rng` per observation.
[[nodiscard]] std::vector<PValue> p_value_stream(std::span<const std::uint8_t> observations,
                                                 RandomSource& rng);

}  // namespace ctm

#endif  // CTM_CONFORMAL_HPP
