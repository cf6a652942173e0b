#include "ctm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ctm/bayes_kelly.hpp"
#include "ctm/benchmarks.hpp"
#include "ctm/conformal.hpp"
#include "ctm/eprocess.hpp"
#include "ctm/simple_jumper.hpp"
#include "ctm/simplified.hpp"

namespace ctm {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t word, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    h ^= (word >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

std::string jump_rate_id(double rate) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, rate, std::chars_format::fixed);
  return "sj_" + std::string(buf, res.ptr);
}

// Runs one capital process over the stream, recording its path.
template <typename StepFn>
Trajectory record(std::string id, std::size_t n, bool keep_path, StepFn&& step) {
  Trajectory t{std::move(id), {}, 0.0};
  if (keep_path) t.values.reserve(n);
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    value = step(i);
    if (keep_path) t.values.push_back(value);
  }
  t.final_value = value;
  return t;
}

bool uses_pvalues(ProcessKind kind) {
  return kind == ProcessKind::bk || kind == ProcessKind::sbk || kind == ProcessKind::sj;
}

std::vector<ProcessKind> unique_processes(const std::vector<ProcessKind>& processes) {
  std::vector<ProcessKind> out;
  for (const ProcessKind p : processes) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

Bits generate_markov(const MarkovParams& params, std::size_t n, RandomSource& rng) {
  Bits bits;
  bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double prob = i == 0 ? MarkovParams::first_prob_one() : params.prob_one_after(bits.back());
    bits.push_back(rng.bernoulli(prob) ? 1 : 0);
  }
  return bits;
}

Bits generate_bernoulli(double pi, std::size_t n, RandomSource& rng) {
  if (!(pi >= 0.0 && pi <= 1.0)) throw std::invalid_argument("Bernoulli parameter outside [0, 1]");
  Bits bits;
  bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) bits.push_back(rng.bernoulli(pi) ? 1 : 0);
  return bits;
}

Bits generate(const DataLaw& law, std::size_t n, RandomSource& rng) {
  if (const auto* markov = std::get_if<MarkovParams>(&law)) return generate_markov(*markov, n, rng);
  return generate_bernoulli(std::get<BernoulliLaw>(law).pi, n, rng);
}

ProcessKind parse_process(std::string_view name) {
  if (name == "ub") return ProcessKind::ub;
  if (name == "lb") return ProcessKind::lb;
  if (name == "bk") return ProcessKind::bk;
  if (name == "sbk") return ProcessKind::sbk;
  if (name == "sj") return ProcessKind::sj;
  if (name == "r") return ProcessKind::r;
  throw UnknownProcessError("unknown process: '" + std::string(name) +
                            "' (expected ub, lb, bk, sbk, sj or r)");
}

std::vector<ProcessKind> parse_process_list(std::string_view comma_separated) {
  std::vector<ProcessKind> out;
  while (!comma_separated.empty()) {
    const auto comma = comma_separated.find(',');
    out.push_back(parse_process(comma_separated.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    comma_separated.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UnknownProcessError("empty process list");
  return out;
}

std::vector<std::string> process_ids(const std::vector<ProcessKind>& processes,
                                     const RunOptions& options) {
  std::vector<std::string> ids;
  for (const ProcessKind p : unique_processes(processes)) {
    switch (p) {
      case ProcessKind::ub: ids.emplace_back("ub"); break;
      case ProcessKind::lb: ids.emplace_back("lb"); break;
      case ProcessKind::bk: ids.emplace_back("bk"); break;
      case ProcessKind::sbk: ids.emplace_back("sbk"); break;
      case ProcessKind::r: ids.emplace_back("r"); break;
      case ProcessKind::sj:
        for (const double rate : options.jump_rates) ids.push_back(jump_rate_id(rate));
        break;
    }
  }
  return ids;
}

std::uint64_t digest_bits(const Bits& bits) {
  std::uint64_t h = kFnvOffset;
  for (const std::uint8_t b : bits) fnv_mix(h, b, 1);
  return h;
}

std::uint64_t digest_pvalues(const std::vector<PValue>& pvalues) {
  std::uint64_t h = kFnvOffset;
  for (const PValue& p : pvalues) fnv_mix(h, std::bit_cast<std::uint64_t>(p.value()), 8);
  return h;
}

RunResult run_single(const Scenario& scenario, const std::vector<ProcessKind>& processes,
                     const RunOptions& options, std::uint64_t run_index) {
  const RandomSource root(scenario.seed);
  RandomSource data_rng = root.substream(run_index, StreamPurpose::data);
  RandomSource theta_rng = root.substream(run_index, StreamPurpose::randomizer);

  const std::size_t n = scenario.n_steps;
  const Bits bits = generate(scenario.data_law, n, data_rng);
  const auto kinds = unique_processes(processes);

  std::vector<PValue> pvalues;
  if (std::any_of(kinds.begin(), kinds.end(), uses_pvalues)) pvalues = p_value_stream(bits, theta_rng);

  RunResult result;
  result.data_digest = digest_bits(bits);
  result.pvalue_digest = digest_pvalues(pvalues);
  const MarkovParams& alt = scenario.alternative;
  const bool keep = options.record_trajectories;

  for (const ProcessKind kind : kinds) {
    switch (kind) {
      case ProcessKind::ub:
      case ProcessKind::lb: {
        BenchmarkTracker tracker(alt);
        const bool upper = kind == ProcessKind::ub;
        result.trajectories.push_back(record(upper ? "ub" : "lb", n, keep, [&](std::size_t i) {
          tracker.push(bits[i]);
          return (upper ? tracker.upper() : tracker.lower()).log10_value();
        }));
        break;
      }
      case ProcessKind::r: {
        EProcessState state;
        result.trajectories.push_back(record("r", n, keep, [&](std::size_t i) {
          auto [next, value] = r_step(state, bits[i]);
          state = next;
          return value;
        }));
        break;
      }
      case ProcessKind::bk: {
        BayesKellyMartingale bk(alt);
        result.trajectories.push_back(record("bk", n, keep, [&](std::size_t i) {
          bk.step(pvalues[i]);
          return bk.capital().log10_value();
        }));
        break;
      }
      case ProcessKind::sbk: {
        SimplifiedBayesKellyMartingale sbk(alt);
        result.trajectories.push_back(record("sbk", n, keep, [&](std::size_t i) {
          sbk.step(pvalues[i]);
          return sbk.capital().log10_value();
        }));
        break;
      }
      case ProcessKind::sj: {
        for (const double rate : options.jump_rates) {
          SimpleJumperMartingale sj(rate);
          result.trajectories.push_back(record(jump_rate_id(rate), n, keep, [&](std::size_t i) {
            sj.step(pvalues[i]);
            return sj.capital().log10_value();
          }));
        }
        break;
      }
    }
  }
  return result;
}

WeightTable run_bk_weights(const Scenario& scenario, std::size_t step, std::uint64_t run_index) {
  if (step == 0 || step > scenario.n_steps) {
    throw std::invalid_argument("weight snapshot step must lie in 1.." +
                                std::to_string(scenario.n_steps));
  }
  const RandomSource root(scenario.seed);
  RandomSource data_rng = root.substream(run_index, StreamPurpose::data);
  RandomSource theta_rng = root.substream(run_index, StreamPurpose::randomizer);
  const Bits bits = generate(scenario.data_law, scenario.n_steps, data_rng);
  const std::vector<PValue> pvalues = p_value_stream(bits, theta_rng);
  BayesKellyMartingale bk(scenario.alternative);
  for (std::size_t i = 0; i < step; ++i) bk.step(pvalues[i]);
  return *bk.weights();
}

SweepResult run_many(const Scenario& scenario, std::size_t n_runs,
                     const std::vector<ProcessKind>& processes, const RunOptions& options,
                     unsigned threads) {
  if (n_runs == 0) throw std::invalid_argument("run_many needs at least one run");
  SweepResult sweep;
  sweep.process_ids = process_ids(processes, options);
  sweep.finals.assign(sweep.process_ids.size(), std::vector<double>(n_runs, 0.0));

  RunOptions finals_only = options;
  finals_only.record_trajectories = false;

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_runs));

  std::atomic<std::size_t> next_run{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t run = next_run++; run < n_runs; run = next_run++) {
      try {
        const RunResult r = run_single(scenario, processes, finals_only, run);
        for (std::size_t i = 0; i < r.trajectories.size(); ++i) {
          sweep.finals[i][run] = r.trajectories[i].final_value;
        }
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_run = n_runs;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return sweep;
}

}  // namespace ctm
