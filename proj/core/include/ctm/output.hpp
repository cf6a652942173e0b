#ifndef CTM_OUTPUT_HPP
#define CTM_OUTPUT_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ctm/boxplot.hpp"
#include "ctm/experiments.hpp"

namespace ctm {

/// Decimal with 9 significant digits, dot
/// separator, "inf"/"-inf"/"nan" for non-finite values.
[[nodiscard]] std::string format_sig9(double value);

/// Header "step,<id>,..." then one row per step. With a window only the
/// last `window` steps are written.
void write_trajectory_csv(std::ostream& out, const std::vector<Trajectory>& trajectories,
                          std::optional<std::size_t> window = std::nullopt);

/// Header "process,run,final_log10"; rows grouped by process, then run.
void write_finals_csv(std::ostream& out, const SweepResult& sweep);

/// Header "process,n,median,q1,q3,whisker_low,whisker_high,notch_low,notch_high".
void write_stats_csv(std::ostream& out, const std::vector<std::string>& ids,
                     const std::vector<BoxplotStats>& stats);

/// Header "k,weight".
void write_weights_csv(std::ostream& out,
                       const std::vector<std::pair<std::size_t, double>>& snapshot);

/// Line chart of log10 capital against step.
void write_trajectory_svg(std::ostream& out, const std::vector<Trajectory>& trajectories,
                          std::optional<std::size_t> window = std::nullopt,
                          const std::string& title = {});

/// Notched boxplots, one per process.
void write_boxplot_svg(std::ostream& out, const std::vector<std::string>& ids,
                       const std::vector<BoxplotStats>& stats, const std::string& title = {});

}  // namespace ctm

#endif  // CTM_OUTPUT_HPP
