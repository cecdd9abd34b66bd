#include "cec/load_optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace cec {

namespace {

struct Ordered {
  std::vector<MachineId> perm;
};

/// Shared tail of both solvers: given machines in SCR order, run the
/// descending k search and assemble the solution. c_k = (L - sum of storage
/// of machines after k) / (sum of speeds of machines up to k); decrement k
/// while c_k exceeds the k-th SCR.
OptimizerSolution solve_on_order(const Scenario& sc,
                                 const std::vector<MachineId>& perm) {
  const int n_t = static_cast<int>(perm.size());
  auto speed = [&](int i) { return sc.s[perm[i] - 1]; };
  auto stor = [&](int i) { return Rational(sc.sigma[perm[i] - 1]); };

  Rational speed_prefix;  // sum of speeds of machines 1..k
  for (int i = 0; i < n_t; ++i) speed_prefix += speed(i);
  Rational storage_suffix;  // sum of storage of machines k+1..N_t

  int k = n_t;
  Rational c_hat;
  while (k >= 1) {
    c_hat = (Rational(sc.L) - storage_suffix) / speed_prefix;
    if (c_hat <= stor(k - 1) / speed(k - 1)) break;
    storage_suffix += stor(k - 1);
    speed_prefix -= speed(k - 1);
    --k;
  }
  if (k < 1) throw std::logic_error("k* search fell below 1");

  OptimizerSolution sol;
  sol.k_star = k;
  sol.c_hat = c_hat;
  sol.mu_star.mu.assign(sc.N, Rational(0));
  for (int i = 0; i < n_t; ++i) {
    MachineId n = perm[i];
    sol.mu_star[n - 1] = (i < k) ? c_hat * sc.s[n - 1] : stor(i);
  }
  return sol;
}

void require_feasible(const Scenario& sc, const AvailabilitySet& avail) {
  if (avail.available.empty())
    throw std::invalid_argument("availability set is empty");
  if (sc.stored_at(avail) < sc.L)
    throw std::invalid_argument("infeasible step: Z_t < L");
}

}  // namespace

OrderedMachines order_by_scr(const Scenario& sc,
                             const AvailabilitySet& avail) {
  if (avail.available.empty())
    throw std::invalid_argument("availability set is empty");
  OrderedMachines om;
  om.perm.assign(avail.available.begin(), avail.available.end());
  std::stable_sort(om.perm.begin(), om.perm.end(),
                   [&sc](MachineId a, MachineId b) {
                     Rational ra = Rational(sc.sigma[a - 1]) / sc.s[a - 1];
                     Rational rb = Rational(sc.sigma[b - 1]) / sc.s[b - 1];
                     if (ra != rb) return rb < ra;
                     return a < b;
                   });
  for (MachineId n : om.perm)
    om.scr.push_back(Rational(sc.sigma[n - 1]) / sc.s[n - 1]);
  return om;
}

OptimizerSolution solve_load(const Scenario& sc, const AvailabilitySet& avail) {
  require_feasible(sc, avail);
  return solve_on_order(sc, order_by_scr(sc, avail).perm);
}

OptimizerSolution solve_load_homogeneous(const Scenario& sc,
                                         const AvailabilitySet& avail) {
  require_feasible(sc, avail);
  for (MachineId n : avail.available)
    if (sc.sigma[n - 1] != 1)
      throw std::invalid_argument(
          "homogeneous solver requires sigma[n] = 1 for available machines");
  // Ascending speed equals non-increasing SCR when every sigma is 1.
  std::vector<MachineId> perm(avail.available.begin(), avail.available.end());
  std::stable_sort(perm.begin(), perm.end(), [&sc](MachineId a, MachineId b) {
    if (sc.s[a - 1] != sc.s[b - 1]) return sc.s[a - 1] < sc.s[b - 1];
    return a < b;
  });
  return solve_on_order(sc, perm);
}

Rational overall_time(const LoadVector& mu, const std::vector<Rational>& s) {
  if (mu.size() != s.size())
    throw std::invalid_argument("load/speed length mismatch");
  Rational worst(0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Rational t = mu[i] / s[i];
    if (t > worst) worst = t;
  }
  return worst;
}

}  // namespace cec
