#include "ctm/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace ctm {

std::pair<PValue, ConformalState> next_p_value(ConformalState state, int z, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta outside (0, 1)");
  const ConformalState next{state.n + 1, state.k + (z ? 1U : 0U)};
  const double n = static_cast<double>(next.n);
  const double k = static_cast<double>(next.k);
  double p = z ? theta * k / n : (k + theta * (n - k)) / n;
  // Rounding can land on an endpoint for theta within an ulp of 0 or 1.
  if (p >= 1.0) p = std::nextafter(1.0, 0.0);
  if (p <= 0.0) p = std::nextafter(0.0, 1.0);
  return {PValue(p), next};
}

std::vector<PValue> p_value_stream(std::span<const std::uint8_t> observations, RandomSource& rng) {
  std::vector<PValue> out;
  out.reserve(observations.size());
  ConformalTransducer transducer;
  for (const std::uint8_t z : observations) out.push_back(transducer.push(z, rng.uniform_open()));
  return out;
}

}  // namespace ctm
