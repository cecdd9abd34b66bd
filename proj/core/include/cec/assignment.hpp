#pragma once

#include <optional>
#include <vector>

#include "cec/scenario.hpp"

namespace cec {

/// Result of a filling run: F sets, each covering an alpha_f fraction of the
/// q/L rows. For a plain fill() the sets hold machine ids; for
/// fill_heterogeneous() they hold cs-matrix indices. Sets are sorted
/// ascending.
struct AssignmentPlan {
  int F = 0;
  std::vector<Rational> alphas;       // length F, all positive, sum to 1
  std::vector<std::vector<int>> sets; // length F, each of size L
};

/// Snapshot of the fill loop before one iteration, for invariant checks.
struct FillStep {
  int f = 0;
  std::vector<Rational> remaining;  // m before the iteration
  Rational load_left;               // L' = sum(m)
  Rational alpha;                   // fraction assigned this iteration
};
using FillTrace = std::vector<FillStep>;

/// Split of mu* into fully and partially computed cs-matrices. theta_hat[n]
/// is absent when mu*[n] is an integer.
struct PartialComputePlan {
  std::vector<std::vector<int>> Q_tilde;        // fully computed, per machine
  std::vector<std::optional<int>> theta_hat;    // partial cs-matrix index
  std::vector<Rational> mu_hat;                 // fractional parts
  Rational L_hat;                               // sum(mu_hat), an integer
};

/// Feasibility gate: a (mu, L)-filling solution exists iff
/// mu[n] <= sum(mu) / L for all n.
bool check_feasible(const LoadVector& mu, int L);

/// Filling algorithm for one cs-matrix per machine. Each iteration assigns
/// an alpha_f fraction of the rows to the machine with the least remaining
/// load plus the L-1 machines with the most, choosing alpha_f so the feasibility
/// condition survives to the next iteration. Terminates in at most N_t
/// iterations. Ties in the sort are broken by ascending machine index.
AssignmentPlan fill(const LoadVector& mu, int L, FillTrace* trace = nullptr);

/// Per-machine split of mu* into floor(mu*) fully computed cs-matrices
/// (lowest indices of Q_n first) and one partially computed cs-matrix.
PartialComputePlan plan_partials(const LoadVector& mu_star,
                                 const StorageMap& map);

/// General filling for machines holding several cs-matrices: runs fill() on
/// the fractional parts with threshold L_hat, then widens each set with the
/// partially-computed indices and every fully-computed cs-matrix.
AssignmentPlan fill_heterogeneous(const LoadVector& mu_star,
                                  const StorageMap& map, int L,
                                  FillTrace* trace = nullptr);

}  // namespace cec
