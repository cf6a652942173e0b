#ifndef CTM_BAYES_KELLY_HPP
#define CTM_BAYES_KELLY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ctm/log_capital.hpp"
#include "ctm/step_function.hpp"
#include "ctm/types.hpp"

namespace ctm {

/// Raised when the alternative gives zero density to an observed p-value.
/// Cannot happen for nondegenerate parameters.
class ZeroNormalizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Posterior weights w^n_{k,j} of the Bayes-Kelly martingale: the posterior
/// probability that the first n hidden bits contain k ones and end in j.
class WeightTable {
 public:
  /// Table at step `n` with all weights zero.
  explicit WeightTable(std::size_t n);

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] double weight(std::size_t k, int j) const { return j ? ones_[k] : zeros_[k]; }
  double& weight(std::size_t k, int j) { return j ? ones_[k] : zeros_[k]; }
  [[nodiscard]] double sum() const;
  /// Re-dimensions to step `n`, zeroing every cell; keeps capacity.
  void reset(std::size_t n);

  /// Weights indexed by k for cells ending in 0 (j = 0) and 1 (j = 1).
  [[nodiscard]] const std::vector<double>& ending_in(int j) const { return j ? ones_ : zeros_; }
  std::vector<double>& ending_in(int j) { return j ? ones_ : zeros_; }

 private:
  std::size_t n_;
  std::vector<double> zeros_;
  std::vector<double> ones_;
};

/// Start table at n = 1: w_{0,0} = w_{1,1} = 0.5, the other two cells zero.
[[nodiscard]] WeightTable bk_init();

/// Density of p_{n+1} given k ones among the first n bits and bit j next:
/// (n+1)/(k+1) on [0, (k+1)/(n+1)] for j = 1, (n+1)/(n-k+1) on
/// [k/(n+1), 1] for j = 0, zero elsewhere.
[[nodiscard]] double bk_likelihood(std::size_t n, std::size_t k, int j, PValue p);

struct BkUpdate {
  WeightTable weights;
  /// Sum of the unnormalized weights; equals f_n(p_n).
  double normalizer;
  /// Number of (k, j) cells evaluated.
  std::uint64_t cells_touched;
};

/// One step of the posterior recursion from step n-1 to n.
[[nodiscard]] BkUpdate bk_update(const WeightTable& weights, const MarkovParams& params, PValue p);

/// bk_update writing into `out` (whose buffers are reused). Returns the
/// normalizer; adds the evaluated cells to `cells_touched`.
double bk_update_into(const WeightTable& weights, const MarkovParams& params, PValue p,
                      WeightTable& out, std::uint64_t& cells_touched);

/// Bayes-Kelly betting function f_n given the weights at step n-1: the
/// predictive density of p_n, a mixture of U[0, (k+1)/n] and U[k/n, 1].
[[nodiscard]] StepFunction bk_predictive(const WeightTable& weights, const MarkovParams& params);

/// Marginal weights over k (summed over the last bit), one entry per k.
[[nodiscard]] std::vector<std::pair<std::size_t, double>> export_weight_snapshot(
    const WeightTable& weights);

/// The Bayes-Kelly conformal test martingale as an online state machine.
/// Step n costs O(n) cell updates.
class BayesKellyMartingale {
 public:
  explicit BayesKellyMartingale(MarkovParams params) : params_(params) {}

  /// Consumes p_n; returns the betting factor f_n(p_n).
  double step(PValue p);

  [[nodiscard]] LogCapital capital() const { return capital_; }
  [[nodiscard]] std::size_t steps() const { return steps_; }
  /// Posterior weights after the last step; empty before the first.
  [[nodiscard]] const std::optional<WeightTable>& weights() const { return weights_; }
  [[nodiscard]] std::uint64_t cells_touched() const { return cells_touched_; }
  [[nodiscard]] const MarkovParams& params() const { return params_; }

 private:
  MarkovParams params_;
  std::optional<WeightTable> weights_;
  std::optional<WeightTable> scratch_;
  LogCapital capital_;
  std::size_t steps_ = 0;
  std::uint64_t cells_touched_ = 0;
};

}  // namespace ctm

#endif  // CTM_BAYES_KELLY_HPP
