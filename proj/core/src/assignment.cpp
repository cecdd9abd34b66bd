#include "cec/assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace cec {

bool check_feasible(const LoadVector& mu, int L) {
  if (L <= 0) throw std::invalid_argument("L must be positive");
  Rational bound = mu.sum() / Rational(L);
  for (const auto& v : mu.mu) {
    if (v < Rational(0)) throw std::invalid_argument("negative load");
    if (v > bound) return false;
  }
  return true;
}

AssignmentPlan fill(const LoadVector& mu, int L, FillTrace* trace) {
  if (!check_feasible(mu, L))
    throw std::invalid_argument("infeasible load vector");

  const int N = static_cast<int>(mu.size());
  std::vector<Rational> m = mu.mu;
  Rational load_left = mu.sum();

  AssignmentPlan plan;
  int iterations_cap = N + 1;  // F <= N_t; one extra before declaring a bug
  while (true) {
    std::vector<int> active;  // 0-based indices of machines with m > 0
    for (int n = 0; n < N; ++n)
      if (!m[n].is_zero()) active.push_back(n);
    if (active.empty()) break;
    if (--iterations_cap == 0)
      throw std::logic_error("fill exceeded N_t iterations");

    const int n_prime = static_cast<int>(active.size());
    if (n_prime < L)
      throw std::logic_error(
          "fill invariant broken: fewer than L machines left with load");

    // Ascending by remaining load, ties by machine index.
    std::stable_sort(active.begin(), active.end(), [&m](int a, int b) {
      if (m[a] != m[b]) return m[a] < m[b];
      return a < b;
    });

    std::vector<int> set;  // machine ids (1-based)
    set.push_back(active[0] + 1);
    for (int i = n_prime - L + 1; i < n_prime; ++i) set.push_back(active[i] + 1);

    Rational alpha;
    if (n_prime >= L + 1) {
      Rational slack = load_left / Rational(L) - m[active[n_prime - L]];
      alpha = std::min(slack, m[active[0]]);
    } else {
      alpha = m[active[0]];
    }
    if (!(alpha > Rational(0)))
      throw std::logic_error("fill produced a non-positive alpha");

    if (trace)
      trace->push_back({plan.F + 1, m, load_left, alpha});

    for (int id : set) m[id - 1] -= alpha;
    load_left -= alpha * Rational(L);

    std::sort(set.begin(), set.end());
    plan.alphas.push_back(alpha);
    plan.sets.push_back(std::move(set));
    ++plan.F;
  }
  return plan;
}

PartialComputePlan plan_partials(const LoadVector& mu_star,
                                 const StorageMap& map) {
  const std::size_t N = mu_star.size();
  if (map.Q.size() != N)
    throw std::invalid_argument("storage map / load vector length mismatch");

  PartialComputePlan pp;
  pp.Q_tilde.resize(N);
  pp.theta_hat.resize(N);
  pp.mu_hat.resize(N);
  for (std::size_t n = 0; n < N; ++n) {
    const auto& q = map.Q[n];
    std::int64_t whole = mu_star[n].floor();
    if (whole < 0 || whole > static_cast<std::int64_t>(q.size()))
      throw std::invalid_argument("load outside [0, sigma]");
    // Lowest stored indices are computed fully; the next one partially.
    pp.Q_tilde[n].assign(q.begin(), q.begin() + whole);
    pp.mu_hat[n] = mu_star[n].frac();
    if (!pp.mu_hat[n].is_zero()) pp.theta_hat[n] = q.at(whole);
    pp.L_hat += pp.mu_hat[n];
  }
  return pp;
}

AssignmentPlan fill_heterogeneous(const LoadVector& mu_star,
                                  const StorageMap& map, int L,
                                  FillTrace* trace) {
  PartialComputePlan pp = plan_partials(mu_star, map);
  if (!pp.L_hat.is_integer())
    throw std::logic_error("sum of fractional loads is not an integer");
  const int L_hat = static_cast<int>(pp.L_hat.num());

  std::vector<int> full;  // union of Q_tilde, in every final set
  for (const auto& q : pp.Q_tilde) full.insert(full.end(), q.begin(), q.end());
  std::sort(full.begin(), full.end());
  if (static_cast<int>(full.size()) != L - L_hat)
    throw std::logic_error("fully-computed cs-matrices do not count L - L_hat");

  AssignmentPlan plan;
  if (L_hat == 0) {
    plan.F = 1;
    plan.alphas = {Rational(1)};
    plan.sets = {full};
    return plan;
  }

  LoadVector mu_hat{pp.mu_hat};
  AssignmentPlan inner = fill(mu_hat, L_hat, trace);

  plan.F = inner.F;
  plan.alphas = inner.alphas;
  for (const auto& machines : inner.sets) {
    std::vector<int> set = full;
    for (int n : machines) set.push_back(pp.theta_hat.at(n - 1).value());
    std::sort(set.begin(), set.end());
    if (static_cast<int>(set.size()) != L)
      throw std::logic_error("assembled cs-matrix set is not of size L");
    plan.sets.push_back(std::move(set));
  }
  return plan;
}

}  // namespace cec
