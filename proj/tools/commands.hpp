#ifndef CTM_TOOLS_COMMANDS_HPP
#define CTM_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctm/experiments.hpp"
#include "ctm/types.hpp"

namespace ctm::cli {

/// Bad flag values; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "hard", "easy" or "pi10=<p>,pi11=<p>".
MarkovParams parse_case(const std::string& text);
/// "small", "medium", "large" or "n=<count>".
std::size_t parse_scenario(const std::string& text);
/// "pi=<p>" with p in [0, 1].
BernoulliLaw parse_null(const std::string& text);

/// Flags shared by every command, still as text.
struct CommonFlags {
  std::string case_name = "hard";
  std::string scenario = "large";
  std::uint64_t seed = 2021;
  std::string processes;
  std::string out = "-";
  std::string svg;
  std::optional<std::size_t> window;
  std::vector<double> sj_jump;
  std::string null_law;
};

struct SweepFlags {
  std::size_t runs = 1000;
  unsigned threads = 0;
  std::string stats;
};

struct WeightsFlags {
  std::optional<std::size_t> step;
  std::uint64_t run = 0;
};

/// Validated scenario and options built from the common flags.
struct Resolved {
  Scenario scenario;
  std::vector<ProcessKind> processes;
  RunOptions options;
};

Resolved resolve(const CommonFlags& flags, const std::string& default_processes);

/// Path of the stats file when --stats is omitted: "<out stem>_stats.csv".
std::string default_stats_path(const std::string& out);

// Each command returns the process exit code.
int cmd_simulate(const CommonFlags& flags);
int cmd_sweep(const CommonFlags& flags, const SweepFlags& sweep);
int cmd_weights(const CommonFlags& flags, const WeightsFlags& weights);

}  // namespace ctm::cli

#endif  // CTM_TOOLS_COMMANDS_HPP
