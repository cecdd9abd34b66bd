#include "cec/scenario.hpp"

#include <numeric>

namespace cec {

int Scenario::sum_sigma() const {
  return std::accumulate(sigma.begin(), sigma.end(), 0);
}

int Scenario::stored_at(const AvailabilitySet& avail) const {
  int z = 0;
  for (MachineId n : avail.available) z += sigma.at(n - 1);
  return z;
}

MachineId StorageMap::owner(int cs_index) const {
  for (std::size_t n = 0; n < Q.size(); ++n)
    for (int i : Q[n])
      if (i == cs_index) return static_cast<MachineId>(n + 1);
  return 0;
}

Rational LoadVector::sum() const {
  Rational total;
  for (const auto& v : mu) total += v;
  return total;
}

ValidationReport validate_scenario(const Scenario& sc, const StorageMap* map) {
  ValidationReport rep;
  auto bad = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (sc.N <= 0) bad("N must be positive");
  if (static_cast<int>(sc.s.size()) != sc.N ||
      static_cast<int>(sc.sigma.size()) != sc.N) {
    bad("speed/storage vectors must have length N");
    return rep;
  }
  for (int n = 1; n <= sc.N; ++n) {
    if (!(sc.s[n - 1] > Rational(0)))
      bad("speed of machine " + std::to_string(n) + " must be positive");
    if (sc.sigma[n - 1] < 1)
      bad("storage of machine " + std::to_string(n) + " must be >= 1");
  }
  if (sc.L <= 0) bad("L must be positive");
  if (sc.Z != sc.sum_sigma())
    bad("Z != sum(sigma): declared " + std::to_string(sc.Z) + ", actual " +
        std::to_string(sc.sum_sigma()));
  if (sc.L > 0 && sc.q % sc.L != 0)
    bad("q must be divisible by L (q=" + std::to_string(sc.q) +
        ", L=" + std::to_string(sc.L) + ")");
  if (sc.r <= 0) bad("r must be positive");

  for (const auto& ev : sc.events) {
    for (MachineId n : ev.available)
      if (n < 1 || n > sc.N)
        bad("t=" + std::to_string(ev.t) + ": machine id " + std::to_string(n) +
            " out of range");
    if (ev.available.empty() || sc.stored_at(ev) < sc.L)
      bad("t=" + std::to_string(ev.t) + ": Z_t < L (Z_t=" +
          std::to_string(sc.stored_at(ev)) + ", L=" + std::to_string(sc.L) +
          ")");
  }

  if (map) {
    if (static_cast<int>(map->Q.size()) != sc.N) {
      bad("storage map must have one set per machine");
    } else {
      std::vector<int> seen(sc.Z + 1, 0);
      for (int n = 1; n <= sc.N; ++n) {
        if (static_cast<int>(map->Q[n - 1].size()) != sc.sigma[n - 1])
          bad("|Q_" + std::to_string(n) + "| != sigma[" + std::to_string(n) +
              "]");
        for (int i : map->Q[n - 1]) {
          if (i < 1 || i > sc.Z)
            bad("cs-matrix index " + std::to_string(i) + " out of [Z]");
          else if (++seen[i] > 1)
            bad("cs-matrix index " + std::to_string(i) +
                " stored on more than one machine (non-disjoint Q_n)");
        }
      }
      for (int i = 1; i <= sc.Z; ++i)
        if (seen[i] == 0)
          bad("cs-matrix index " + std::to_string(i) + " stored nowhere");
    }
  }
  return rep;
}

StorageMap default_storage_map(const std::vector<int>& sigma) {
  StorageMap map;
  int next = 1;
  for (int count : sigma) {
    std::vector<int> q(count);
    std::iota(q.begin(), q.end(), next);
    next += count;
    map.Q.push_back(std::move(q));
  }
  return map;
}

}  // namespace cec
