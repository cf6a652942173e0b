#ifndef CTM_RANDOM_HPP
#define CTM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ctm {

/// Purpose tags for substreams derived from a root seed.
enum class StreamPurpose : std::uint32_t {
  data = 0,
  randomizer = 1,
};

/// Deterministic source of uniform variates on the open interval (0, 1).
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the
/// standard, so a given seed yields the same variates on every toolchain.
/// Independent substreams are keyed by (run index, purpose) through a
/// splitmix64 mix of the root seed, which makes runs order-independent.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  /// Substream for one (run, purpose) pair. Depends only on the root seed,
  /// not on how many variates the root has produced.
  [[nodiscard]] RandomSource substream(std::uint64_t run_index, std::uint32_t purpose_tag) const;
  [[nodiscard]] RandomSource substream(std::uint64_t run_index, StreamPurpose purpose) const {
    return substream(run_index, static_cast<std::uint32_t>(purpose));
  }

  /// Next variate, uniform on (0, 1) with 53-bit resolution; never 0 or 1.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Bernoulli(p) draw consuming exactly one variate. p = 0 never fires and
  /// p = 1 always does.
  bool bernoulli(double p) { return uniform_open() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

[[nodiscard]] inline RandomSource make_substream(const RandomSource& root, std::uint64_t run_index,
                                                 std::uint32_t purpose_tag) {
  return root.substream(run_index, purpose_tag);
}

}  // namespace ctm

#endif  // CTM_RANDOM_HPP
