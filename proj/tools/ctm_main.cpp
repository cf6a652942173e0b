// ctm: conformal testing of binary streams against Markov alternatives.
//
//   ctm simulate --case hard --scenario large --processes ub,lb,bk,sbk --out traj.csv
//   ctm sweep    --case easy --scenario medium --runs 1000 --out finals.csv --svg box.svg
//   ctm weights  --case hard --scenario medium --out weights.csv

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_common(CLI::App& cmd, ctm::cli::CommonFlags& flags, bool trajectories) {
  cmd.add_option("--case", flags.case_name, "hard | easy | pi10=<p>,pi11=<p>")
      ->capture_default_str();
  cmd.add_option("--scenario", flags.scenario, "small | medium | large | n=<count>")
      ->capture_default_str();
  cmd.add_option("--seed", flags.seed, "root seed")->capture_default_str();
  cmd.add_option("--processes", flags.processes, "comma list of ub,lb,bk,sbk,sj,r");
  cmd.add_option("--out", flags.out, "output CSV path, - for stdout")->capture_default_str();
  cmd.add_option("--null", flags.null_law, "pi=<p>: draw data i.i.d. Bernoulli(p) instead");
  if (trajectories) {
    cmd.add_option("--svg", flags.svg, "also write an SVG figure");
    cmd.add_option("--sj-jump", flags.sj_jump, "Simple Jumper jumping rates")->delimiter(',');
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal test martingales for binary streams under Markov alternatives"};
  app.require_subcommand(1);

  ctm::cli::CommonFlags simulate_flags;
  auto* simulate = app.add_subcommand("simulate", "one run; per-step log10 trajectories");
  add_common(*simulate, simulate_flags, true);
  std::size_t window = 0;
  auto* window_opt = simulate->add_option("--window", window, "only the last W steps");

  ctm::cli::CommonFlags sweep_flags;
  ctm::cli::SweepFlags sweep_extra;
  auto* sweep = app.add_subcommand("sweep", "many runs; final values and boxplot statistics");
  add_common(*sweep, sweep_flags, true);
  sweep->add_option("--runs", sweep_extra.runs, "number of runs")->capture_default_str();
  sweep->add_option("--threads", sweep_extra.threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  sweep->add_option("--stats", sweep_extra.stats, "boxplot statistics CSV path");

  ctm::cli::CommonFlags weights_flags;
  ctm::cli::WeightsFlags weights_extra;
  weights_flags.scenario = "medium";
  auto* weights = app.add_subcommand("weights", "Bayes-Kelly marginal weights over k");
  add_common(*weights, weights_flags, false);
  std::size_t step = 0;
  auto* step_opt = weights->add_option("--step", step, "snapshot step, default the last");
  weights->add_option("--run", weights_extra.run, "run index")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*simulate) {
      if (*window_opt) simulate_flags.window = window;
      return ctm::cli::cmd_simulate(simulate_flags);
    }
    if (*sweep) return ctm::cli::cmd_sweep(sweep_flags, sweep_extra);
    if (*step_opt) weights_extra.step = step;
    return ctm::cli::cmd_weights(weights_flags, weights_extra);
  } catch (const ctm::cli::UsageError& e) {
    std::cerr << "ctm: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ctm: " << e.what() << '\n';
    return 1;
  }
}
