#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cec/oracle.hpp"
#include "cec/report_io.hpp"
#include "cec/sim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;

struct CommonArgs {
  std::string scenario_path;
  std::string out_path;
  std::string csv_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file")
      ->required();
  cmd->add_option("--out", args.out_path, "Write the JSON report here");
  cmd->add_option("--csv", args.csv_path, "Write the assignment table here");
}

cec::ScenarioFile load_and_validate(const CommonArgs& args) {
  cec::ScenarioFile sf = cec::load_scenario(args.scenario_path);
  auto map = cec::default_storage_map(sf.scenario.sigma);
  auto report = cec::validate_scenario(sf.scenario, &map);
  // Step-level shortfalls (Z_t < L) are reported by the planner as
  // infeasible steps rather than rejected up front.
  std::erase_if(report.violations, [](const std::string& v) {
    return v.find("Z_t < L") != std::string::npos;
  });
  if (!report.ok()) {
    std::cerr << "{\"error\":\"invalid scenario\",\"violations\":[";
    for (std::size_t i = 0; i < report.violations.size(); ++i)
      std::cerr << (i ? "," : "") << '"' << report.violations[i] << '"';
    std::cerr << "]}\n";
    std::exit(kExitValidation);
  }
  return sf;
}

int emit(const cec::ScenarioFile& sf, const std::vector<cec::StepReport>& steps,
         const CommonArgs& args, bool executed) {
  std::string json = cec::report_to_json(sf, steps, executed);
  if (args.out_path.empty())
    std::cout << json;
  else
    cec::write_file(args.out_path, json);
  if (!args.csv_path.empty())
    cec::write_file(args.csv_path, cec::report_to_csv(steps));

  for (const auto& st : steps) {
    if (!st.feasible) return kExitInfeasible;
    if (executed && !st.decode_ok) return kExitVerification;
  }
  return kExitOk;
}

int cmd_plan(const CommonArgs& args) {
  cec::ScenarioFile sf = load_and_validate(args);
  std::vector<cec::StepReport> steps;
  for (const auto& ev : sf.scenario.events)
    steps.push_back(cec::plan_step(sf.scenario, ev));
  return emit(sf, steps, args, /*executed=*/false);
}

int cmd_run(const CommonArgs& args, const std::string& matrix_path,
            std::uint64_t seed_flag, bool seed_given, std::uint64_t prime_flag,
            bool fault_inject) {
  cec::ScenarioFile sf = load_and_validate(args);
  if (prime_flag) sf.prime = prime_flag;
  if (seed_given) sf.seed = seed_flag;

  cec::FieldMatrix X;
  if (!matrix_path.empty()) {
    X = cec::load_matrix(matrix_path);
    if (static_cast<std::int64_t>(X.rows) != sf.scenario.q ||
        static_cast<std::int64_t>(X.cols) != sf.scenario.r) {
      std::cerr << "{\"error\":\"matrix dimensions do not match scenario\"}\n";
      return kExitValidation;
    }
  } else {
    X = cec::random_matrix(sf.seed, sf.scenario.q, sf.scenario.r, sf.prime);
  }
  auto w_list = cec::random_vectors(sf.seed, sf.scenario.events.size(),
                                    sf.scenario.r, sf.prime);

  cec::RunOptions opts;
  opts.fault_inject = fault_inject;
  auto steps = cec::run_timeline(sf.scenario, X, w_list, sf.prime, opts);
  return emit(sf, steps, args, /*executed=*/true);
}

int cmd_oracle(const CommonArgs& args) {
  cec::ScenarioFile sf = load_and_validate(args);
  const cec::Scenario& sc = sf.scenario;

  for (const auto& ev : sc.events)
    if (ev.available.size() > 6) {
      std::cerr << "{\"error\":\"oracle limited to N_t <= 6\"}\n";
      return kExitValidation;
    }
  for (const auto& s : sc.s)
    if (s.den() > 100) {
      std::cerr << "{\"error\":\"oracle limited to speed denominators <= "
                   "100\"}\n";
      return kExitValidation;
    }

  auto map = cec::default_storage_map(sc.sigma);
  bool all_agree = true;
  for (const auto& ev : sc.events) {
    if (sc.stored_at(ev) < sc.L) {
      std::cout << "t=" << ev.t << " infeasible (both reject)\n";
      continue;
    }
    auto sol = cec::solve_load(sc, ev);
    auto oracle = cec::oracle_min_time(sc, ev);
    bool load_ok = sol.c_hat == oracle;

    auto plan = cec::fill_heterogeneous(sol.mu_star, map, sc.L);
    auto violations =
        cec::verify_assignment(sol.mu_star, map, ev, sc.L, plan);

    std::cout << "t=" << ev.t << " optimizer "
              << (load_ok ? "agree" : "DISAGREE") << " (c_hat=" << sol.c_hat
              << ", oracle=" << oracle << "), assignment "
              << (violations.empty() ? "agree" : "DISAGREE") << "\n";
    for (const auto& v : violations) std::cout << "  " << v << "\n";
    all_agree = all_agree && load_ok && violations.empty();
  }
  return all_agree ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coded elastic computing planner and simulator"};
  app.require_subcommand(1);

  CommonArgs plan_args, run_args, oracle_args;
  std::string matrix_path;
  std::uint64_t seed_flag = 0, prime_flag = 0;
  bool fault_inject = false;

  CLI::App* plan = app.add_subcommand(
      "plan", "Loads and assignments per step, no matrix execution");
  add_common(plan, plan_args);

  CLI::App* run = app.add_subcommand(
      "run", "Full execution with per-step decode verification");
  add_common(run, run_args);
  run->add_option("--matrix", matrix_path, "Matrix file ('q r' then entries)");
  auto* seed_opt = run->add_option("--seed", seed_flag,
                                   "Seed for generated X and w vectors");
  run->add_option("--prime", prime_flag, "Field prime (overrides scenario)");
  run->add_flag("--fault-inject", fault_inject,
                "Corrupt one partial result per step");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Cross-check the solver and filling against brute force");
  add_common(oracle, oracle_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan->parsed()) return cmd_plan(plan_args);
    if (run->parsed())
      return cmd_run(run_args, matrix_path, seed_flag, seed_opt->count() > 0,
                     prime_flag, fault_inject);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return kExitValidation;
  }
  return kExitOk;
}
