#pragma once

#include <string>
#include <vector>

#include "cec/assignment.hpp"
#include "cec/scenario.hpp"

namespace cec {

/// Independent minimizer of max mu[n]/s[n] over the relaxed feasible set
/// (sum(mu) = L, 0 <= mu <= sigma). Works directly on the monotone supply
/// function g(c) = sum_n min(c * s[n], sigma[n]): sweeps the breakpoint
/// segments in ascending order and solves the linear crossing g(c) = L
/// exactly. Shares no code or ordering logic with solve_load.
Rational oracle_min_time(const Scenario& sc, const AvailabilitySet& avail);

/// Checks a machine-indexed fill plan against its load vector: alphas
/// positive and summing to 1, every set of size L drawn from machines with
/// load, per-machine realization exactly equal to mu, F bounded by the
/// number of available machines. Returns human-readable violations.
std::vector<std::string> verify_fill(const LoadVector& mu, int L,
                                     const AssignmentPlan& plan);

/// Same checks for a cs-matrix-indexed plan: sets drawn from the available
/// machines' storage and per-machine realization
/// sum_f alpha_f * |P_f intersect Q_n| equal to mu*[n].
std::vector<std::string> verify_assignment(const LoadVector& mu_star,
                                           const StorageMap& map,
                                           const AvailabilitySet& avail, int L,
                                           const AssignmentPlan& plan);

}  // namespace cec
