#pragma once

#include <vector>

#include "cec/scenario.hpp"

namespace cec {

/// Available machines permuted into non-increasing storage-to-speed-ratio
/// (SCR) order, ties broken by ascending machine index.
struct OrderedMachines {
  std::vector<MachineId> perm;  // machine ids, SCR non-increasing
  std::vector<Rational> scr;    // sigma[n]/s[n] in permuted order
};

/// Solution of the relaxed load problem: minimize max mu[n]/s[n] subject to
/// sum(mu) = L and 0 <= mu[n] <= sigma[n].
struct OptimizerSolution {
  LoadVector mu_star;  // full length N, zeros for unavailable machines
  Rational c_hat;      // overall computation time
  int k_star = 0;      // machines (in SCR order) with mu = c_hat * s
};

OrderedMachines order_by_scr(const Scenario& sc, const AvailabilitySet& avail);

/// Closed-form solver: the first k* machines in SCR order run for exactly
/// c_hat (mu = c_hat * s), the rest are storage-limited (mu = sigma). k* is
/// found by the descending search starting at N_t.
OptimizerSolution solve_load(const Scenario& sc, const AvailabilitySet& avail);

/// All-sigma-1 specialization (machines ordered by ascending speed); kept as
/// an independent cross-check of solve_load.
OptimizerSolution solve_load_homogeneous(const Scenario& sc,
                                         const AvailabilitySet& avail);

/// c(mu) = max over machines of mu[n]/s[n].
Rational overall_time(const LoadVector& mu, const std::vector<Rational>& s);

}  // namespace cec
