#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <string_view>

#include "ctm/bayes_kelly.hpp"
#include "ctm/boxplot.hpp"
#include "ctm/output.hpp"

namespace ctm::cli {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw UsageError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view strip_key(std::string_view text, std::string_view key) {
  if (!text.starts_with(key)) throw UsageError("expected '" + std::string(key) + "...'");
  return text.substr(key.size());
}

// Writes to `path`, or stdout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path == "-") {
      stream_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw std::runtime_error("cannot open output file: " + path);
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }
  void finish(const std::string& path) {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("failed writing " + (path == "-" ? "stdout" : path));
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::string describe(const Resolved& r, const std::string& case_name,
                     const std::string& scenario_name) {
  std::string title = "case " + case_name + ", scenario " + scenario_name + ", seed " +
                      std::to_string(r.scenario.seed);
  if (const auto* null = std::get_if<BernoulliLaw>(&r.scenario.data_law)) {
    title += ", null Ber(" + format_sig9(null->pi) + ")";
  }
  return title;
}

}  // namespace

MarkovParams parse_case(const std::string& text) {
  if (text == "hard") return MarkovParams::hard();
  if (text == "easy") return MarkovParams::easy();
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--case must be hard, easy or pi10=<p>,pi11=<p>; got '" + text + "'");
  }
  const std::string_view view(text);
  const double pi10 = parse_double(strip_key(view.substr(0, comma), "pi10="), "pi10");
  const double pi11 = parse_double(strip_key(view.substr(comma + 1), "pi11="), "pi11");
  try {
    return MarkovParams(pi10, pi11);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::size_t parse_scenario(const std::string& text) {
  if (text == "small" || text == "medium" || text == "large") return scenario_length(text);
  const std::string_view digits = strip_key(text, "n=");
  std::size_t n = 0;
  const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size() || n == 0) {
    throw UsageError("--scenario must be small, medium, large or n=<positive count>; got '" +
                     text + "'");
  }
  return n;
}

BernoulliLaw parse_null(const std::string& text) {
  const double pi = parse_double(strip_key(text, "pi="), "--null");
  if (!(pi >= 0.0 && pi <= 1.0)) throw UsageError("--null pi must lie in [0, 1]");
  return BernoulliLaw{pi};
}

Resolved resolve(const CommonFlags& flags, const std::string& default_processes) {
  const MarkovParams alternative = parse_case(flags.case_name);
  const std::size_t n = parse_scenario(flags.scenario);
  DataLaw law = alternative;
  if (!flags.null_law.empty()) law = parse_null(flags.null_law);

  Resolved r{Scenario{n, alternative, law, flags.seed}, {}, {}};
  try {
    r.processes = parse_process_list(flags.processes.empty() ? default_processes : flags.processes);
  } catch (const UnknownProcessError& e) {
    throw UsageError(e.what());
  }
  if (!flags.sj_jump.empty()) {
    for (const double rate : flags.sj_jump) {
      if (!(rate >= 0.0 && rate <= 1.0)) throw UsageError("--sj-jump rates must lie in [0, 1]");
    }
    r.options.jump_rates = flags.sj_jump;
  }
  if (flags.window && *flags.window == 0) throw UsageError("--window must be positive");
  return r;
}

std::string default_stats_path(const std::string& out) {
  if (out == "-") return "-";
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? out.substr(0, dot) : out) + "_stats.csv";
}

int cmd_simulate(const CommonFlags& flags) {
  const Resolved r = resolve(flags, "ub,lb,r,bk,sbk");
  const RunResult run = run_single(r.scenario, r.processes, r.options, 0);

  Sink csv(flags.out);
  write_trajectory_csv(csv.stream(), run.trajectories, flags.window);
  csv.finish(flags.out);

  if (!flags.svg.empty()) {
    Sink svg(flags.svg);
    write_trajectory_svg(svg.stream(), run.trajectories, flags.window,
                         describe(r, flags.case_name, flags.scenario));
    svg.finish(flags.svg);
  }
  return 0;
}

int cmd_sweep(const CommonFlags& flags, const SweepFlags& sweep_flags) {
  if (sweep_flags.runs == 0) throw UsageError("--runs must be at least 1");
  const Resolved r = resolve(flags, "ub,lb,bk,sbk");
  const SweepResult sweep =
      run_many(r.scenario, sweep_flags.runs, r.processes, r.options, sweep_flags.threads);

  std::vector<BoxplotStats> stats;
  if (sweep_flags.runs >= 5) {
    for (const auto& finals : sweep.finals) stats.push_back(boxplot_stats(finals));
  } else {
    std::cerr << "ctm: fewer than 5 runs, boxplot statistics skipped\n";
  }

  Sink finals(flags.out);
  write_finals_csv(finals.stream(), sweep);
  finals.finish(flags.out);

  if (!stats.empty()) {
    const std::string stats_path =
        sweep_flags.stats.empty() ? default_stats_path(flags.out) : sweep_flags.stats;
    Sink out(stats_path);
    write_stats_csv(out.stream(), sweep.process_ids, stats);
    out.finish(stats_path);

    if (!flags.svg.empty()) {
      Sink svg(flags.svg);
      write_boxplot_svg(svg.stream(), sweep.process_ids, stats,
                        describe(r, flags.case_name, flags.scenario) + ", " +
                            std::to_string(sweep_flags.runs) + " runs");
      svg.finish(flags.svg);
    }
  }
  return 0;
}

int cmd_weights(const CommonFlags& flags, const WeightsFlags& weights_flags) {
  const Resolved r = resolve(flags, "bk");
  const std::size_t step = weights_flags.step.value_or(r.scenario.n_steps);
  if (step == 0 || step > r.scenario.n_steps) {
    throw UsageError("--step must lie in 1.." + std::to_string(r.scenario.n_steps));
  }
  const WeightTable table = run_bk_weights(r.scenario, step, weights_flags.run);
  Sink out(flags.out);
  write_weights_csv(out.stream(), export_weight_snapshot(table));
  out.finish(flags.out);
  return 0;
}

}  // namespace ctm::cli
