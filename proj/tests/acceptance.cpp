// Acceptance suite: one pass/fail line per criterion, oracle-anchored and
// exact. Run via ctest (-R acceptance) or directly; exits non-zero on any
// failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gik/approx.hpp"
#include "gik/error.hpp"
#include "gik/gap.hpp"
#include "gik/generator.hpp"
#include "gik/heavy_dp.hpp"
#include "gik/io.hpp"
#include "gik/oracle.hpp"
#include "gik/qptas.hpp"
#include "gik/structure.hpp"

#ifndef GIK_CLI_PATH
#define GIK_CLI_PATH "./gik"
#endif

namespace {

using namespace gik;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string summary;
  std::function<bool(std::ostringstream&)> run;
};

Instance mixed_pool_instance(std::uint64_t seed, int max_n, int max_t) {
  static const Family families[] = {Family::uniform, Family::time_invariant, Family::discounted,
                                    Family::heavy_tail_weights};
  return generate(seed, families[seed % 4], 1 + static_cast<int>(seed % max_n),
                  1 + static_cast<int>(seed % max_t));
}

Chain random_feasible_chain(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed * 77 + 13);
  std::vector<std::pair<int, int>> picks;
  std::vector<Rational> loads(inst.periods(), Rational(0));
  for (int i : inst.items) {
    const int t = static_cast<int>(rng.below(inst.periods() + 1));
    if (t == 0) continue;
    bool fits = true;
    for (int tau = t; tau <= inst.periods() && fits; ++tau) {
      if (loads[tau - 1] + inst.weight(i) > inst.capacities(tau - 1)) fits = false;
    }
    if (!fits) continue;
    for (int tau = t; tau <= inst.periods(); ++tau) loads[tau - 1] += inst.weight(i);
    picks.emplace_back(i, t);
  }
  return chain_from_times(inst, picks);
}

Permutation random_perm(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed * 31 + 5);
  std::vector<int> pool = inst.items;
  Permutation perm;
  const std::uint64_t keep = pool.empty() ? 0 : rng.below(pool.size() + 1);
  for (std::uint64_t j = 0; j < keep; ++j) {
    const std::size_t at = rng.below(pool.size());
    perm.order.push_back(pool[at]);
    pool.erase(pool.begin() + at);
  }
  return perm;
}

bool criterion_reformulation(std::ostringstream& note) {
  const auto start = Clock::now();
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance inst = mixed_pool_instance(seed, 8, 4);
    const Chain c = random_feasible_chain(inst, seed);
    const Chain round = perm_to_chain(inst, chain_to_perm(inst, c));
    if (chain_profit(inst, round) < chain_profit(inst, c)) return false;
    const Permutation p = random_perm(inst, seed);
    if (chain_profit(inst, perm_to_chain(inst, p)) != perm_profit(inst, p)) return false;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  note << "500 instances, " << secs << " s";
  return secs < 5.0;
}

bool criterion_half(std::ostringstream& note) {
  const auto start = Clock::now();
  const Rational eps(1, 4);
  Rational worst(1);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = mixed_pool_instance(seed, 6, 3);
    const Rational opt = brute_force(inst).opt_profit;
    const Chain chain = solve_half(inst, eps);
    if (!chain_feasible(inst, chain)) return false;
    const Rational profit = chain_profit(inst, chain);
    if (profit < Rational(3, 8) * opt) return false;
    if (opt > 0) worst = std::min(worst, profit / opt);
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  note << "200 instances, min ratio " << worst.str() << ", " << secs << " s";
  return secs < 60.0;
}

bool criterion_heavy(std::ostringstream& note) {
  const Rational eps(1, 4);
  int nonzero = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = mixed_pool_instance(seed, 6, 3);
    if (inst.items.empty()) continue;
    const Instance scaled = scale_to_wmin3(inst);
    const IntervalClassifier clf(scaled, eps);
    const auto [heavy_star, light_star] = opt_decomposition(inst, clf);
    (void)light_star;
    if (heavy_star > 0) ++nonzero;
    if (perm_profit(scaled, solve_heavy(scaled, eps)) < (1 - eps) * heavy_star) return false;
  }
  note << "200 instances, " << nonzero << " with positive heavy share";
  return nonzero > 0;
}

bool criterion_light_chain(std::ostringstream& note) {
  const Rational eps(1, 32);
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    // Alternate wide spreads (real light contributions) with moderate ones.
    const Instance raw = seed % 2 == 0
                             ? generate(seed, Family::heavy_tail_weights,
                                        4 + static_cast<int>(seed % 3), 1 + seed % 3)
                             : mixed_pool_instance(seed, 6, 3);
    if (raw.items.empty()) continue;
    const Instance inst = scale_to_wmin3(raw);
    const IntervalClassifier clf(inst, eps);
    const auto [heavy_star, light_star] = opt_decomposition(raw, clf);
    (void)heavy_star;
    const GapInstance gap = build_gap(inst, clf);
    if (gap.allowed.empty()) {
      if (light_star != 0) return false;
      continue;
    }
    const FractionalSolution lp = solve_lp(gap);
    if (lp.objective < (1 - 5 * eps) * light_star) return false;
    const IntegralAssignment rounded = st_round(gap, lp);
    if (assignment_objective(gap, rounded) < lp.objective) return false;
    const IntegralAssignment restored = greedy_restore(gap, rounded);
    if (assignment_objective(gap, restored) < (1 - 8 * eps) * lp.objective) return false;
    const Permutation light = assignment_to_perm(inst, gap, restored);
    if (perm_profit(inst, light) < assignment_objective(gap, restored)) return false;
    if (light_star > 0) ++nontrivial;
  }
  note << "100 instances, " << nontrivial << " with positive light share";
  return nontrivial > 0;
}

bool criterion_st_postconditions(std::ostringstream& note) {
  // st_round hard-asserts its three properties on every call; here the
  // rounding is driven across both acceptance pools and the properties are
  // re-checked externally.
  int invocations = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance raw = seed % 3 == 0
                             ? generate(seed, Family::heavy_tail_weights, 5, 1 + seed % 3)
                             : mixed_pool_instance(seed, 6, 3);
    if (raw.items.empty()) continue;
    const Instance inst = scale_to_wmin3(raw);
    const Rational eps = seed % 2 == 0 ? Rational(1, 32) : Rational(1, 4);
    const IntervalClassifier clf(inst, eps);
    const GapInstance gap = build_gap(inst, clf);
    if (gap.allowed.empty()) continue;
    const FractionalSolution lp = solve_lp(gap);
    IntegralAssignment rounded;
    try {
      rounded = st_round(gap, lp);  // throws on any postcondition violation
    } catch (const Error&) {
      return false;
    }
    ++invocations;
    if (assignment_objective(gap, rounded) < lp.objective) return false;
    for (const auto& [item, bucket] : rounded.assign) {
      if (gap.q.count({item, bucket}) == 0) return false;
    }
    for (const auto& [bucket, item] : designated_infeasibility_items(gap, rounded)) {
      Rational load = 0;
      for (const auto& [i, b] : rounded.assign) {
        if (b == bucket) load += inst.weight(i);
      }
      if (load - inst.weight(item) > gap.capacities[bucket - 1]) return false;
    }
  }
  note << invocations << " rounding invocations, zero violations";
  return invocations > 0;
}

bool criterion_boosting(std::ostringstream& note) {
  const auto start = Clock::now();
  const Rational eps(1, 3);
  const AlgorithmHandle oracle = oracle_algorithm(10, 5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = mixed_pool_instance(seed, 5, 2);
    const Rational opt = brute_force(inst).opt_profit;
    if (chain_profit(inst, boost_solve(inst, oracle, eps)) != opt) return false;
    if (!inst.items.empty()) {
      const IntervalClassifier clf(scale_to_wmin3(inst), eps);
      const auto [heavy_star, light_star] = opt_decomposition(inst, clf);
      (void)light_star;
      if (chain_profit(inst, boost_solve(inst, empty_algorithm(), eps)) < heavy_star) {
        return false;
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  note << "50 instances at eps=1/3, " << secs << " s";
  return secs < 120.0;
}

bool criterion_ratio_recurrence(std::ostringstream& note) {
  for (const Rational delta : {Rational(0), Rational(1, 100), Rational(1, 10), Rational(1, 4)}) {
    const auto alphas = ratio_sequence(delta, 64);
    for (int r = 0; r <= 64; ++r) {
      if (alphas[r] < Rational(r, r + 1) - r * delta) return false;
    }
  }
  note << "r in [0,64], delta in {0, 1/100, 1/10, 1/4}";
  return true;
}

bool criterion_qptas_bounded(std::ostringstream& note) {
  const auto start = Clock::now();
  const Rational eps(9, 10);  // 3 rounds at delta = 81/200
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance inst = mixed_pool_instance(seed, 4, 2);
    const SolveOutcome outcome = qptas_bounded(inst, eps);
    if (!outcome.certified || !chain_feasible(inst, outcome.chain)) return false;
    if (chain_profit(inst, outcome.chain) < Rational(1, 10) * brute_force(inst).opt_profit) {
      return false;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  note << "25 seeds, " << secs << " s (the (1-eps) regime at small eps exceeds desk scale; "
       << "criteria 6-7 substitute)";
  return secs < 600.0;
}

bool criterion_wellspaced(std::ostringstream& note) {
  const Rational eps(1, 2);
  GenParams wide;
  wide.weight_decades = 10;  // spreads up to 1e9
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = generate(seed, Family::heavy_tail_weights,
                                   2 + static_cast<int>(seed % 7), 1 + seed % 3, wide);
    const auto candidates = build_wellspaced(inst, eps);
    for (const auto& wsi : candidates) {
      try {
        validate_wellspaced(wsi);
      } catch (const Error&) {
        return false;
      }
    }
    for (int i : inst.items) {
      int missing = 0;
      for (const auto& wsi : candidates) {
        if (!wsi.base.is_active(i)) ++missing;
      }
      if (missing != 1) return false;
    }
  }
  // Shifting loss on brute-forceable sizes.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = generate(seed, Family::heavy_tail_weights,
                                   2 + static_cast<int>(seed % 5), 1 + seed % 3);
    const OracleResult opt = brute_force(inst);
    Rational best = 0;
    for (const auto& wsi : build_wellspaced(inst, eps)) {
      best = std::max(best, chain_profit(inst, restrict_chain(opt.opt_chain, wsi.base.items)));
    }
    if (best < (1 - eps) * opt.opt_profit) return false;
  }
  note << "100 wide-spread instances; shifting identity and loss on 40 oracle-solved";
  return true;
}

bool criterion_structure(std::ostringstream& note) {
  const Rational eps(1, 2);
  int transforms = 0, removals = 0;
  for (std::uint64_t seed = 0; seed < 70; ++seed) {
    const Instance inst = generate(seed, Family::heavy_tail_weights,
                                   2 + static_cast<int>(seed % 5), 1 + seed % 2);
    for (const auto& wsi : build_wellspaced(inst, eps)) {
      if (wsi.base.items.empty()) continue;
      const OracleResult opt = brute_force(wsi.base);
      try {
        const SparseResult sparse = sparse_transform(wsi, opt.opt_perm, eps);
        if (!verify_disjoint_X(sparse.trace)) return false;
        ++transforms;
      } catch (const Error&) {
        return false;  // a lemma property failed inside
      }
    }
  }
  // Adversarial two-cluster constructions with >= 1/eps crossings.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = generate(seed, Family::wellspaced_adversarial, 4, 2);
    WellSpacedInstance wsi;
    wsi.base = inst;
    wsi.clusters = {{2, 3}, {0, 1}};
    wsi.epsilon = eps;
    wsi.source_size = inst.size();
    validate_wellspaced(wsi);
    const OracleResult opt = brute_force(inst);
    if (cross_count(wsi, opt.opt_perm, 1) < 2) return false;  // needs >= 1/eps
    try {
      const SparseResult sparse = sparse_transform(wsi, opt.opt_perm, eps);
      if (!verify_disjoint_X(sparse.trace)) return false;
      ++transforms;
      for (const auto& node : sparse.trace) {
        if (node.removed) ++removals;
      }
    } catch (const Error&) {
      return false;
    }
  }
  note << transforms << " transforms, " << removals << " adversarial removals";
  return transforms >= 100 && removals >= 30;
}

bool criterion_qptas_general(std::ostringstream& note) {
  const auto start = Clock::now();
  const Rational eps(1, 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = generate(seed, Family::wellspaced_adversarial, 4, 2);
    for (const auto& wsi : build_wellspaced(inst, eps)) {
      if (wsi.cluster_count() > 2) return false;  // the M <= 2 regime
    }
    const SolveOutcome outcome = qptas_general_solve(inst, eps);
    if (!outcome.certified || !chain_feasible(inst, outcome.chain)) return false;
    if (chain_profit(inst, outcome.chain) < Rational(1, 5) * brute_force(inst).opt_profit) {
      return false;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  note << "10 two-cluster runs, " << secs << " s; thinness asserted in-solver";
  return secs < 900.0;
}

int run_cli(const std::string& args, const std::string& out_file) {
  const std::string cmd = std::string(GIK_CLI_PATH) + " " + args + " >" + out_file + " 2>/dev/null";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

bool criterion_cli(std::ostringstream& note) {
  const std::string dir = "/tmp/gik_acceptance";
  std::system(("mkdir -p " + dir).c_str());

  // Instance JSON round trip, bit exact.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = generate(seed, Family::heavy_tail_weights, 6, 3);
    const nlohmann::json doc = instance_to_json(inst);
    if (instance_to_json(instance_from_json(doc)) != doc) return false;
  }

  VectorR w(3), caps(2);
  w << 3, 4, 5;
  caps << 7, 12;
  MatrixR p(3, 2);
  p(0, 0) = 8; p(0, 1) = 6;
  p(1, 0) = 4; p(1, 1) = 9;
  p(2, 0) = 5; p(2, 1) = 5;
  const std::string inst_path = dir + "/inst_a.json";
  {
    std::ofstream out(inst_path);
    out << instance_to_json(validate_instance(w, caps, p)).dump();
  }
  if (run_cli("solve --algorithm exact --input " + inst_path, dir + "/exact.json") != 0) {
    return false;
  }
  {
    std::ifstream in(dir + "/exact.json");
    nlohmann::json doc;
    in >> doc;
    if (doc.at("profit") != "22") return false;
  }
  {
    std::ofstream out(dir + "/bad.json");
    out << "{broken";
  }
  if (run_cli("solve --algorithm exact --input " + dir + "/bad.json", dir + "/bad_out.json") != 2) {
    return false;
  }
  if (run_cli("solve --algorithm qptas --epsilon 1/5 --budget-ms 1 "
              "--input gen:well-spaced-adversarial:4:2 --seed 1",
              dir + "/budget.json") != 3) {
    return false;
  }

  // Bench CSV parses back to identical records.
  const std::string csv = dir + "/bench.csv";
  if (run_cli("bench --families uniform,time-invariant --sizes 5x2 --epsilons 1/4 --seeds 3 "
              "--out " + csv + " --algorithms exact,half",
              dir + "/bench.log") != 0) {
    return false;
  }
  std::ifstream csv_in(csv);
  std::ostringstream csv_text;
  csv_text << csv_in.rdbuf();
  std::istringstream first_pass(csv_text.str());
  const std::vector<RunRecord> rows = read_csv(first_pass);
  if (rows.size() != 12) return false;
  std::ostringstream rewritten;
  write_csv(rewritten, rows);
  std::istringstream second_pass(rewritten.str());
  const std::vector<RunRecord> again = read_csv(second_pass);
  if (again.size() != rows.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i] == again[i])) return false;
  }
  for (const auto& r : rows) {
    if (r.algorithm == "exact" && r.ratio && *r.ratio != 1) return false;
  }
  note << "round trips, exit codes 0/2/3, bench CSV of " << rows.size() << " rows";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "reformulation exactness (Phi/Psi identities)", criterion_reformulation},
      {2, "half-approximation: Phi >= (3/8) OPT at eps=1/4", criterion_half},
      {3, "heavy DP: Psi >= (1-eps) Psi_heavy(pi*)", criterion_heavy},
      {4, "light chain of inequalities at eps=1/32", criterion_light_chain},
      {5, "Shmoys-Tardos postconditions on every rounding", criterion_st_postconditions},
      {6, "boosting identities (exact and empty black boxes)", criterion_boosting},
      {7, "ratio recurrence alpha_r >= r/(r+1) - r delta", criterion_ratio_recurrence},
      {8, "bounded QPTAS at eps=9/10: Phi >= (1/10) OPT", criterion_qptas_bounded},
      {9, "well-spaced construction and shifting", criterion_wellspaced},
      {10, "structure lab: FixCrossing and sparse transform", criterion_structure},
      {11, "general QPTAS smoke at eps=1/5", criterion_qptas_general},
      {12, "CLI contract: JSON, CSV, exit codes", criterion_cli},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    bool ok = false;
    std::ostringstream note;
    try {
      ok = criterion.run(note);
    } catch (const std::exception& err) {
      note << "exception: " << err.what();
    }
    if (!ok) ++failures;
    std::cout << "criterion " << criterion.number << (criterion.number < 10 ? "  " : " ")
              << (ok ? "PASS" : "FAIL") << "  " << criterion.summary;
    if (!note.str().empty()) std::cout << "  [" << note.str() << "]";
    std::cout << std::endl;
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed" << std::endl;
  } else {
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
