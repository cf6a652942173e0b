#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ctm/log_capital.hpp"
#include "ctm/random.hpp"
#include "ctm/types.hpp"

namespace ctm {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool open_unit(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

LogCapital& LogCapital::add_factor(double factor) {
  if (!(factor >= 0.0)) throw std::domain_error("capital factor must be nonnegative");
  if (bankrupt()) return *this;
  log10_value_ = factor == 0.0 ? -std::numeric_limits<double>::infinity()
                               : log10_value_ + std::log10(factor);
  return *this;
}

LogCapital log10_add_factor(LogCapital capital, double factor) {
  return capital.add_factor(factor);
}

MarkovParams::MarkovParams(double pi_1_given_0, double pi_1_given_1)
    : pi_1_given_0_(pi_1_given_0), pi_1_given_1_(pi_1_given_1) {
  if (!open_unit(pi_1_given_0) || !open_unit(pi_1_given_1)) {
    throw std::invalid_argument("Markov transition probabilities must lie in (0, 1), got (" +
                                std::to_string(pi_1_given_0) + ", " +
                                std::to_string(pi_1_given_1) + ")");
  }
}

MarkovParams MarkovParams::preset(std::string_view name) {
  if (name == "hard") return hard();
  if (name == "easy") return easy();
  throw std::invalid_argument("unknown case preset: " + std::string(name));
}

std::size_t scenario_length(std::string_view name) {
  if (name == "large") return 10000;
  if (name == "medium") return 1000;
  if (name == "small") return 100;
  throw std::invalid_argument("unknown scenario preset: " + std::string(name));
}

Scenario Scenario::markov(std::size_t n_steps, MarkovParams alternative, std::uint64_t seed) {
  if (n_steps == 0) throw std::invalid_argument("scenario needs at least one step");
  return Scenario{n_steps, alternative, alternative, seed};
}

PValue::PValue(double value) : value_(value) {
  if (!open_unit(value)) throw std::invalid_argument("p-value outside (0, 1)");
}

RandomSource RandomSource::substream(std::uint64_t run_index, std::uint32_t purpose_tag) const {
  std::uint64_t h = splitmix64(seed_);
  h = splitmix64(h ^ run_index);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(purpose_tag) << 32 | purpose_tag));
  return RandomSource(h);
}

}  // namespace ctm
