#pragma once

#include <random>
#include <vector>

#include "cec/scenario.hpp"

namespace cec::testing {

/// N=6, s=[2,2,3,3,4,4], sigma=1, L=3: the heterogeneous-speed,
/// homogeneous-storage walkthrough instance.
inline Scenario example1(std::int64_t q = 105, std::int64_t r = 4) {
  Scenario sc;
  sc.N = 6;
  sc.s = {Rational(2), Rational(2), Rational(3),
          Rational(3), Rational(4), Rational(4)};
  sc.sigma = {1, 1, 1, 1, 1, 1};
  sc.L = 3;
  sc.q = q;
  sc.r = r;
  sc.Z = 6;
  sc.events = {{1, {1, 2, 3, 4, 5, 6}},
               {2, {1, 2, 3, 5, 6}},
               {3, {1, 2, 3, 5}},
               {4, {2, 3, 5}}};
  return sc;
}

/// N=6, s=[2,3,4,2,3,4], sigma=[2,2,2,1,1,1], L=6: the heterogeneous-storage
/// instance (Z=9).
inline Scenario example2(std::int64_t q = 66, std::int64_t r = 4) {
  Scenario sc;
  sc.N = 6;
  sc.s = {Rational(2), Rational(3), Rational(4),
          Rational(2), Rational(3), Rational(4)};
  sc.sigma = {2, 2, 2, 1, 1, 1};
  sc.L = 6;
  sc.q = q;
  sc.r = r;
  sc.Z = 9;
  sc.events = {{1, {1, 2, 3, 4, 5, 6}}};
  return sc;
}

inline LoadVector loads(std::vector<Rational> v) { return LoadVector{std::move(v)}; }

/// Random instance with all machines available: integer speeds <= 8,
/// storage <= 3, L uniform in [1, Z].
inline Scenario random_instance(std::mt19937_64& rng, int max_n = 6) {
  Scenario sc;
  sc.N = 1 + static_cast<int>(rng() % max_n);
  AvailabilitySet ev{1, {}};
  for (int n = 1; n <= sc.N; ++n) {
    sc.s.push_back(Rational(1 + static_cast<std::int64_t>(rng() % 8)));
    sc.sigma.push_back(1 + static_cast<int>(rng() % 3));
    ev.available.insert(n);
  }
  sc.Z = sc.sum_sigma();
  sc.L = 1 + static_cast<int>(rng() % sc.Z);
  sc.q = sc.L;  // row counts are irrelevant to the load problem
  sc.r = 1;
  sc.events = {ev};
  return sc;
}

/// Random feasible filling input: denominators <= 12, entries in [0, 1],
/// summing exactly to L.
inline LoadVector random_feasible_loads(std::mt19937_64& rng, int& L_out) {
  const int n = 2 + static_cast<int>(rng() % 5);
  const int d = 1 + static_cast<int>(rng() % 12);
  const int L = 1 + static_cast<int>(rng() % n);
  std::vector<int> parts(n, 0);
  int remaining = L * d;
  while (remaining > 0) {
    int i = static_cast<int>(rng() % n);
    if (parts[i] < d) {
      ++parts[i];
      --remaining;
    }
  }
  LoadVector mu;
  for (int v : parts) mu.mu.push_back(Rational(v, d));
  L_out = L;
  return mu;
}

}  // namespace cec::testing
