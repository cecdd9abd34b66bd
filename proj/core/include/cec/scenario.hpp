#pragma once

#include <set>
#include <string>
#include <vector>

#include "cec/rational.hpp"

namespace cec {

/// 1-based machine index, matching the external file format.
using MachineId = int;

/// Set of machines available in one time step.
struct AvailabilitySet {
  int t = 1;
  std::set<MachineId> available;
};

/// A full problem instance: machine speeds and storage, code parameters,
/// and the timeline of availability sets. All vectors are indexed by
/// machine id - 1.
struct Scenario {
  int N = 0;
  std::vector<Rational> s;  // speeds, rows per unit time
  std::vector<int> sigma;   // cs-matrices stored per machine
  int L = 0;                // recovery threshold
  std::int64_t q = 0;       // rows of X
  std::int64_t r = 0;       // columns of X
  int Z = 0;                // total cs-matrices, must equal sum(sigma)
  std::vector<AvailabilitySet> events;

  int sum_sigma() const;
  /// Z_t: cs-matrices stored at the machines of `avail`.
  int stored_at(const AvailabilitySet& avail) const;
};

/// Disjoint per-machine cs-matrix index sets Q_n partitioning [Z].
struct StorageMap {
  std::vector<std::vector<int>> Q;  // Q[n-1] = sorted indices in [1..Z]

  const std::vector<int>& of(MachineId n) const { return Q.at(n - 1); }
  /// Machine that stores cs-matrix i, or 0 if none.
  MachineId owner(int cs_index) const;
};

/// Per-machine computation loads. Entries of unavailable machines are 0.
struct LoadVector {
  std::vector<Rational> mu;  // length N

  Rational sum() const;
  const Rational& operator[](std::size_t i) const { return mu[i]; }
  Rational& operator[](std::size_t i) { return mu[i]; }
  std::size_t size() const { return mu.size(); }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every scenario invariant and reports all violations at once.
/// A storage map, when given, is checked for the partition property.
ValidationReport validate_scenario(const Scenario& sc,
                                   const StorageMap* map = nullptr);

/// Contiguous deterministic storage placement: Q_1 = {1..sigma[1]},
/// Q_2 = {sigma[1]+1..sigma[1]+sigma[2]}, ...
StorageMap default_storage_map(const std::vector<int>& sigma);

}  // namespace cec
