#ifndef CTM_EXPERIMENTS_HPP
#define CTM_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctm/random.hpp"
#include "ctm/types.hpp"

namespace ctm {

class UnknownProcessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Markov chain bits: z_1 ~ Ber(0.5), z_{i+1} ~ Ber(pi_{1|z_i}). One variate
/// per bit.
[[nodiscard]] Bits generate_markov(const MarkovParams& params, std::size_t n, RandomSource& rng);

/// n i.i.d. Bernoulli(pi) bits, pi in [0, 1]. One variate per bit.
[[nodiscard]] Bits generate_bernoulli(double pi, std::size_t n, RandomSource& rng);

[[nodiscard]] Bits generate(const DataLaw& law, std::size_t n, RandomSource& rng);

/// Process families: ub, lb, bk, sbk, sj (one process per jump rate), r.
enum class ProcessKind { ub, lb, bk, sbk, sj, r };

[[nodiscard]] ProcessKind parse_process(std::string_view name);
[[nodiscard]] std::vector<ProcessKind> parse_process_list(std::string_view comma_separated);

inline const std::vector<double>& default_jump_rates() {
  static const std::vector<double> rates{0.0001, 0.001, 0.01, 0.1};
  return rates;
}

struct RunOptions {
  std::vector<double> jump_rates = default_jump_rates();
  /// Keep every step's value; otherwise only the final values are kept.
  bool record_trajectories = true;
};

/// Log10 capital path of one process. values[i] is the value after step
/// i + 1; the value 0 at step 0 is implied.
struct Trajectory {
  std::string process_id;
  std::vector<double> values;
  double final_value = 0.0;
};

/// Column identifiers for a process set, in output order: "ub", "lb", "bk",
/// "sbk", "r", and "sj_<J>" for every jump rate.
[[nodiscard]] std::vector<std::string> process_ids(const std::vector<ProcessKind>& processes,
                                                   const RunOptions& options);

struct RunResult {
  std::vector<Trajectory> trajectories;
  /// FNV-1a digests of the bit stream fed to the bit-driven processes and of
  /// the p-value stream fed to the conformal martingales.
  std::uint64_t data_digest = 0;
  std::uint64_t pvalue_digest = 0;
};

[[nodiscard]] std::uint64_t digest_bits(const Bits& bits);
[[nodiscard]] std::uint64_t digest_pvalues(const std::vector<PValue>& pvalues);

/// One run: generates the data from the (run_index, data) substream and
/// the randomizers from the (run_index, randomizer) substream of the
/// scenario seed, then runs every requested process on the same streams.
[[nodiscard]] RunResult run_single(const Scenario& scenario,
                                   const std::vector<ProcessKind>& processes,
                                   const RunOptions& options = {}, std::uint64_t run_index = 0);

class WeightTable;

/// Runs the Bayes-Kelly martingale of run `run_index` for `step` steps
/// (1 <= step <= n_steps) on the same streams run_single uses and returns
/// its posterior weights.
[[nodiscard]] WeightTable run_bk_weights(const Scenario& scenario, std::size_t step,
                                         std::uint64_t run_index = 0);

struct SweepResult {
  std::vector<std::string> process_ids;
  /// finals[i][r]: final log10 value of process i on run r.
  std::vector<std::vector<double>> finals;
};

/// Runs 0 .. n_runs-1 of the scenario on `threads` workers (0 picks the
/// hardware concurrency). Output does not depend on the thread count.
[[nodiscard]] SweepResult run_many(const Scenario& scenario, std::size_t n_runs,
                                   const std::vector<ProcessKind>& processes,
                                   const RunOptions& options = {}, unsigned threads = 0);

}  // namespace ctm

#endif  // CTM_EXPERIMENTS_HPP
