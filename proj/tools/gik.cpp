// Command-line front end: solve one instance, generate instances, or run the
// benchmark sweep against the exact oracle.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gik/approx.hpp"
#include "gik/budget.hpp"
#include "gik/error.hpp"
#include "gik/generator.hpp"
#include "gik/io.hpp"
#include "gik/oracle.hpp"
#include "gik/qptas.hpp"

namespace {

using namespace gik;

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct TimedSolve {
  Chain chain;
  bool certified = true;
  long long wall_ms = 0;
};

long long env_budget_ms() {
  const char* raw = std::getenv("GIK_BUDGET_MS");
  if (raw == nullptr) return 0;
  return std::atoll(raw);
}

Deadline make_deadline(long long budget_ms) {
  return budget_ms > 0 ? Deadline::after_ms(budget_ms) : Deadline();
}

void check_algorithm_epsilon(const std::string& algorithm, const Rational& eps) {
  if (algorithm == "exact") return;
  if (algorithm == "half") {
    check_epsilon_half_regime(eps);
  } else if (algorithm == "qptas-bounded") {
    require(eps > 0 && eps < 1, Errc::out_of_range, "qptas-bounded needs epsilon in (0,1)");
  } else if (algorithm == "qptas") {
    require(check_epsilon_unit_regime(eps) >= 2, Errc::out_of_range,
            "qptas needs 1/epsilon integer >= 2");
  } else {
    fail(Errc::bad_params, "unknown algorithm: " + algorithm);
  }
}

TimedSolve run_algorithm(const std::string& algorithm, const Instance& inst, const Rational& eps,
                         long long budget_ms) {
  TimedSolve result;
  const Deadline deadline = make_deadline(budget_ms);
  const auto start = std::chrono::steady_clock::now();
  if (algorithm == "exact") {
    result.chain = brute_force(inst).opt_chain;
  } else if (algorithm == "half") {
    result.chain = solve_half(inst, eps);
  } else if (algorithm == "qptas-bounded") {
    const SolveOutcome outcome = qptas_bounded(inst, eps, deadline);
    result.chain = outcome.chain;
    result.certified = outcome.certified;
  } else {
    const SolveOutcome outcome = qptas_general_solve(inst, eps, deadline);
    result.chain = outcome.chain;
    result.certified = outcome.certified;
  }
  const auto stop = std::chrono::steady_clock::now();
  result.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return result;
}

// "gen:FAMILY:N:T" makes a seeded instance; anything else is a JSON file.
Instance resolve_input(const std::string& input, std::uint64_t seed) {
  if (input.rfind("gen:", 0) == 0) {
    std::istringstream spec_in(input.substr(4));
    std::string family, n_text, t_text;
    if (!std::getline(spec_in, family, ':') || !std::getline(spec_in, n_text, ':') ||
        !std::getline(spec_in, t_text, ':')) {
      fail(Errc::bad_params, "generated input must look like gen:FAMILY:N:T");
    }
    return generate(seed, family_from_name(family), std::stoi(n_text), std::stoi(t_text));
  }
  return load_instance_file(input);
}

int cmd_solve(const std::string& algorithm, const std::string& epsilon_text,
              const std::string& input, long long budget_ms, std::uint64_t seed) {
  const Rational eps = epsilon_text.empty() ? Rational(0) : parse_rational(epsilon_text);
  check_algorithm_epsilon(algorithm, eps);
  const Instance inst = resolve_input(input, seed);
  const TimedSolve solved = run_algorithm(algorithm, inst, eps, budget_ms);

  nlohmann::json out;
  out["chain"] = chain_to_json(solved.chain);
  out["profit"] = to_string(chain_profit(inst, solved.chain));
  out["certified"] = solved.certified;
  out["wall_ms"] = solved.wall_ms;
  std::cout << out.dump(2) << "\n";
  return solved.certified ? 0 : kExitBudget;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

int cmd_bench(const std::string& families, const std::string& sizes, const std::string& epsilons,
              int seeds, const std::string& out_path, const std::string& algorithms,
              long long budget_ms, bool float_view, int jobs) {
  struct Task {
    Family family;
    int n, T;
    std::uint64_t seed;
    Rational eps;
  };
  std::vector<Task> tasks;
  for (const auto& family : split_list(families)) {
    for (const auto& size : split_list(sizes)) {
      const auto cross = size.find('x');
      require(cross != std::string::npos, Errc::bad_params, "sizes look like NxT");
      const int n = std::stoi(size.substr(0, cross));
      const int T = std::stoi(size.substr(cross + 1));
      for (const auto& eps_text : split_list(epsilons)) {
        for (int seed = 0; seed < seeds; ++seed) {
          tasks.push_back({family_from_name(family), n, T, static_cast<std::uint64_t>(seed),
                           parse_rational(eps_text)});
        }
      }
    }
  }
  const std::vector<std::string> algos = split_list(algorithms);
  for (const auto& algo : algos) {
    for (const auto& task : tasks) check_algorithm_epsilon(algo, task.eps);
  }

  const OracleLimits limits;
  std::vector<std::vector<RunRecord>> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t at = cursor.fetch_add(1);
      if (at >= tasks.size()) return;
      const Task& task = tasks[at];
      const Instance inst = generate(task.seed, task.family, task.n, task.T);
      std::optional<Rational> oracle;
      if (task.n <= limits.max_items && task.T <= limits.max_periods) {
        oracle = brute_force(inst, limits).opt_profit;
      }
      for (const auto& algo : algos) {
        const TimedSolve solved = run_algorithm(algo, inst, task.eps, budget_ms);
        RunRecord record;
        record.instance_id = instance_id(task.family, task.n, task.T, task.seed);
        record.family = family_name(task.family);
        record.n = task.n;
        record.T = task.T;
        record.seed = task.seed;
        record.algorithm = algo;
        record.epsilon = algo == "exact" ? Rational(0) : task.eps;
        record.profit = chain_profit(inst, solved.chain);
        record.oracle_profit = oracle;
        if (oracle && *oracle > 0) record.ratio = record.profit / *oracle;
        record.wall_ms = solved.wall_ms;
        record.certified = solved.certified;
        results[at].push_back(std::move(record));
      }
    }
  };
  const int pool = std::max(1, jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (int j = 0; j < pool; ++j) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::vector<RunRecord> rows;
  for (auto& group : results) {
    for (auto& r : group) rows.push_back(std::move(r));
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::bad_params, "cannot open output file: " + out_path);
  write_csv(out, std::move(rows), float_view);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized incremental knapsack solvers"};
  app.require_subcommand(1);

  std::string algorithm = "half", epsilon_text, input, out_path = "bench.csv";
  std::string families = "uniform", sizes = "6x3", epsilons = "1/4", algorithms = "exact,half";
  long long budget_ms = env_budget_ms();
  std::uint64_t seed = 0;
  int seeds = 10, jobs = 0;
  bool float_view = false;

  auto* solve = app.add_subcommand("solve", "solve one instance, JSON result on stdout");
  solve->add_option("--algorithm", algorithm, "exact|half|qptas-bounded|qptas");
  solve->add_option("--epsilon", epsilon_text, "accuracy, e.g. 1/4");
  solve->add_option("--input", input, "instance JSON file, or gen:FAMILY:N:T")->required();
  solve->add_option("--budget-ms", budget_ms, "wall-clock budget (default GIK_BUDGET_MS)");
  solve->add_option("--seed", seed, "seed for gen: inputs");

  auto* gen = app.add_subcommand("generate", "emit a seeded instance as JSON");
  std::string family = "uniform";
  int gen_n = 6, gen_t = 3;
  gen->add_option("--family", family);
  gen->add_option("--n", gen_n);
  gen->add_option("--T", gen_t);
  gen->add_option("--seed", seed);

  auto* bench = app.add_subcommand("bench", "sweep algorithms against the oracle, CSV out");
  bench->add_option("--families", families, "comma list of generator families");
  bench->add_option("--sizes", sizes, "comma list of NxT sizes");
  bench->add_option("--epsilons", epsilons, "comma list of rationals");
  bench->add_option("--seeds", seeds, "seeds 0..N-1 per configuration");
  bench->add_option("--out", out_path)->required();
  bench->add_option("--algorithms", algorithms, "comma list: exact,half,qptas-bounded,qptas");
  bench->add_option("--budget-ms", budget_ms);
  bench->add_option("--jobs", jobs, "worker threads (default: hardware)");
  bench->add_flag("--float-view", float_view, "append approximate decimal columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (solve->parsed()) return cmd_solve(algorithm, epsilon_text, input, budget_ms, seed);
    if (gen->parsed()) {
      std::cout << instance_to_json(generate(seed, family_from_name(family), gen_n, gen_t)).dump(2)
                << "\n";
      return 0;
    }
    return cmd_bench(families, sizes, epsilons, seeds, out_path, algorithms, budget_ms,
                     float_view, jobs);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitValidation;
  }
}
