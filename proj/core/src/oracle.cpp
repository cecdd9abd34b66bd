#include "cec/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cec {

Rational oracle_min_time(const Scenario& sc, const AvailabilitySet& avail) {
  std::vector<MachineId> ms(avail.available.begin(), avail.available.end());
  if (ms.empty()) throw std::invalid_argument("availability set is empty");
  if (sc.stored_at(avail) < sc.L)
    throw std::invalid_argument("infeasible step: Z_t < L");

  auto supply = [&](const Rational& c) {
    Rational total;
    for (MachineId n : ms)
      total += std::min(c * sc.s[n - 1], Rational(sc.sigma[n - 1]));
    return total;
  };

  std::vector<Rational> breakpoints;
  for (MachineId n : ms)
    breakpoints.push_back(Rational(sc.sigma[n - 1]) / sc.s[n - 1]);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  const Rational L(sc.L);
  Rational prev(0);
  for (const Rational& b : breakpoints) {
    if (supply(b) >= L) {
      // Crossing lies in (prev, b]: saturated machines contribute their
      // storage, the rest contribute c * s.
      Rational sat_storage, unsat_speed;
      for (MachineId n : ms) {
        Rational bp = Rational(sc.sigma[n - 1]) / sc.s[n - 1];
        if (bp <= prev)
          sat_storage += Rational(sc.sigma[n - 1]);
        else
          unsat_speed += sc.s[n - 1];
      }
      return (L - sat_storage) / unsat_speed;
    }
    prev = b;
  }
  throw std::logic_error("supply never reached L despite Z_t >= L");
}

namespace {

void check_common(const std::vector<Rational>& realized, const LoadVector& mu,
                  const AssignmentPlan& plan, int available_count,
                  std::vector<std::string>& out) {
  Rational alpha_sum;
  for (int f = 0; f < plan.F; ++f) {
    if (!(plan.alphas[f] > Rational(0)))
      out.push_back("alpha_" + std::to_string(f + 1) + " is not positive");
    alpha_sum += plan.alphas[f];
  }
  if (alpha_sum != Rational(1) && !mu.sum().is_zero())
    out.push_back("alphas sum to " + alpha_sum.str() + ", not 1");
  if (plan.F > available_count)
    out.push_back("F=" + std::to_string(plan.F) + " exceeds N_t=" +
                  std::to_string(available_count));
  for (std::size_t n = 0; n < mu.size(); ++n)
    if (realized[n] != mu[n])
      out.push_back("machine " + std::to_string(n + 1) + " realizes " +
                    realized[n].str() + ", expected " + mu[n].str());
}

}  // namespace

std::vector<std::string> verify_fill(const LoadVector& mu, int L,
                                     const AssignmentPlan& plan) {
  std::vector<std::string> out;
  int available = 0;
  for (const auto& v : mu.mu)
    if (!v.is_zero()) ++available;

  std::vector<Rational> realized(mu.size());
  for (int f = 0; f < plan.F; ++f) {
    if (static_cast<int>(plan.sets[f].size()) != L)
      out.push_back("|P_" + std::to_string(f + 1) + "| != L");
    for (int n : plan.sets[f]) {
      if (n < 1 || n > static_cast<int>(mu.size()) || mu[n - 1].is_zero())
        out.push_back("P_" + std::to_string(f + 1) +
                      " uses machine without load: " + std::to_string(n));
      else
        realized[n - 1] += plan.alphas[f];
    }
  }
  check_common(realized, mu, plan, available, out);
  return out;
}

std::vector<std::string> verify_assignment(const LoadVector& mu_star,
                                           const StorageMap& map,
                                           const AvailabilitySet& avail, int L,
                                           const AssignmentPlan& plan) {
  std::vector<std::string> out;
  std::vector<MachineId> owner_of;  // cs index -> machine, 0 when unavailable
  int z = 0;
  for (const auto& q : map.Q) z += static_cast<int>(q.size());
  owner_of.assign(z + 1, 0);
  for (MachineId n : avail.available)
    for (int i : map.of(n)) owner_of.at(i) = n;

  std::vector<Rational> realized(mu_star.size());
  for (int f = 0; f < plan.F; ++f) {
    if (static_cast<int>(plan.sets[f].size()) != L)
      out.push_back("|P_" + std::to_string(f + 1) + "| != L");
    for (int i : plan.sets[f]) {
      if (i < 1 || i > z || owner_of[i] == 0)
        out.push_back("P_" + std::to_string(f + 1) +
                      " uses cs-matrix not stored on an available machine: " +
                      std::to_string(i));
      else
        realized[owner_of[i] - 1] += plan.alphas[f];
    }
  }
  check_common(realized, mu_star, plan,
               static_cast<int>(avail.available.size()), out);
  return out;
}

}  // namespace cec
