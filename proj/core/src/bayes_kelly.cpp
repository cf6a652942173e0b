#include "ctm/bayes_kelly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ctm {

WeightTable::WeightTable(std::size_t n) : n_(n), zeros_(n + 1, 0.0), ones_(n + 1, 0.0) {}

double WeightTable::sum() const {
  return std::accumulate(zeros_.begin(), zeros_.end(), 0.0) +
         std::accumulate(ones_.begin(), ones_.end(), 0.0);
}

void WeightTable::reset(std::size_t n) {
  n_ = n;
  zeros_.assign(n + 1, 0.0);
  ones_.assign(n + 1, 0.0);
}

WeightTable bk_init() {
  WeightTable table(1);
  table.weight(0, 0) = 0.5;
  table.weight(1, 1) = 0.5;
  return table;
}

double bk_likelihood(std::size_t n, std::size_t k, int j, PValue p) {
  const double next = static_cast<double>(n + 1);
  if (j) {
    return p.value() <= static_cast<double>(k + 1) / next ? next / static_cast<double>(k + 1) : 0.0;
  }
  return p.value() >= static_cast<double>(k) / next ? next / static_cast<double>(n - k + 1) : 0.0;
}

double bk_update_into(const WeightTable& weights, const MarkovParams& params, PValue p,
                      WeightTable& out, std::uint64_t& cells_touched) {
  const std::size_t m = weights.n() + 1;
  const double md = static_cast<double>(m);
  const double pv = p.value();
  out.reset(m);

  const std::vector<double>& prev0 = weights.ending_in(0);
  const std::vector<double>& prev1 = weights.ending_in(1);
  std::vector<double>& next0 = out.ending_in(0);
  std::vector<double>& next1 = out.ending_in(1);

  const double p00 = params.transition(0, 0);
  const double p10 = params.transition(1, 0);
  const double p01 = params.transition(0, 1);
  const double p11 = params.transition(1, 1);

  // A cell ending in 0 with k ones has p_m ~ U[k/m, 1]: live iff k/m <= p.
  // A cell ending in 1 with k ones has p_m ~ U[0, k/m]: live iff p <= k/m.
  // Both conditions are monotone in k, so the live ranges are contiguous.
  auto zero_live = [&](std::size_t k) { return static_cast<double>(k) / md <= pv; };
  auto one_live = [&](std::size_t k) { return pv <= static_cast<double>(k) / md; };

  std::size_t zero_end = std::min<std::size_t>(static_cast<std::size_t>(pv * md) + 1, m);
  while (zero_end > 0 && !zero_live(zero_end - 1)) --zero_end;
  while (zero_end < m && zero_live(zero_end)) ++zero_end;

  std::size_t one_begin = std::max<std::size_t>(static_cast<std::size_t>(std::ceil(pv * md)), 1);
  one_begin = std::min(one_begin, m);
  while (one_begin > 1 && one_live(one_begin - 1)) --one_begin;
  while (one_begin < m && !one_live(one_begin)) ++one_begin;

  double total = 0.0;
  for (std::size_t k = 0; k < zero_end; ++k) {
    const double w = (prev0[k] * p00 + prev1[k] * p10) * (md / static_cast<double>(m - k));
    next0[k] = w;
    total += w;
  }
  for (std::size_t k = one_begin; k <= m; ++k) {
    const double w = (prev0[k - 1] * p01 + prev1[k - 1] * p11) * (md / static_cast<double>(k));
    next1[k] = w;
    total += w;
  }
  cells_touched += zero_end + (m + 1 - one_begin);

  if (!(total > 0.0)) throw ZeroNormalizerError("Bayes-Kelly weights vanished at step " +
                                                std::to_string(m));
  const double inv = 1.0 / total;
  for (std::size_t k = 0; k < zero_end; ++k) next0[k] *= inv;
  for (std::size_t k = one_begin; k <= m; ++k) next1[k] *= inv;
  return total;
}

BkUpdate bk_update(const WeightTable& weights, const MarkovParams& params, PValue p) {
  BkUpdate result{WeightTable(0), 0.0, 0};
  result.normalizer = bk_update_into(weights, params, p, result.weights, result.cells_touched);
  return result;
}

StepFunction bk_predictive(const WeightTable& weights, const MarkovParams& params) {
  const std::size_t m = weights.n() + 1;
  const double md = static_cast<double>(m);
  // Mass of U[0, (k+1)/m] components (a) and of U[k/m, 1] components (b),
  // already scaled by their densities.
  std::vector<double> a(m), b(m);
  for (std::size_t k = 0; k < m; ++k) {
    a[k] = (weights.weight(k, 0) * params.prob_one_after(0) +
            weights.weight(k, 1) * params.prob_one_after(1)) *
           (md / static_cast<double>(k + 1));
    b[k] = (weights.weight(k, 0) * params.prob_zero_after(0) +
            weights.weight(k, 1) * params.prob_zero_after(1)) *
           (md / static_cast<double>(m - k));
  }
  // suffix_a[i] = sum_{k >= i} a[k]; prefix_b[i] = sum_{k <= i} b[k].
  std::vector<double> suffix_a(m + 1, 0.0), prefix_b(m, 0.0);
  for (std::size_t i = m; i-- > 0;) suffix_a[i] = suffix_a[i + 1] + a[i];
  std::partial_sum(b.begin(), b.end(), prefix_b.begin());

  std::vector<double> breaks(m + 1), intervals(m), points(m + 1);
  for (std::size_t i = 0; i <= m; ++i) breaks[i] = static_cast<double>(i) / md;
  for (std::size_t i = 0; i < m; ++i) intervals[i] = suffix_a[i] + prefix_b[i];
  // At i/m the indicators 1{p <= (k+1)/m} hold for k >= i-1 and
  // 1{p >= k/m} for k <= i.
  for (std::size_t i = 0; i <= m; ++i) {
    const double left = suffix_a[i == 0 ? 0 : i - 1];
    const double right = prefix_b[std::min(i, m - 1)];
    points[i] = left + right;
  }
  return StepFunction(std::move(breaks), std::move(intervals), std::move(points));
}

std::vector<std::pair<std::size_t, double>> export_weight_snapshot(const WeightTable& weights) {
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(weights.n() + 1);
  for (std::size_t k = 0; k <= weights.n(); ++k) {
    out.emplace_back(k, weights.weight(k, 0) + weights.weight(k, 1));
  }
  return out;
}

double BayesKellyMartingale::step(PValue p) {
  ++steps_;
  if (!weights_) {
    // p_1 is U[0, 1] under every hidden sequence, so f_1 = 1.
    weights_ = bk_init();
    scratch_ = WeightTable(0);
    cells_touched_ += 4;
    return 1.0;
  }
  const double factor = bk_update_into(*weights_, params_, p, *scratch_, cells_touched_);
  std::swap(*weights_, *scratch_);
  capital_.add_factor(factor);
  return factor;
}

}  // namespace ctm
