#include <random>

#include "cec/assignment.hpp"
#include "cec/load_optimizer.hpp"
#include "cec/oracle.hpp"
#include "doctest.h"
#include "test_scenarios.hpp"

using namespace cec;
using cec::testing::example1;
using cec::testing::example2;
using cec::testing::loads;

TEST_CASE("feasibility gate") {
  CHECK(check_feasible(loads({{2, 5}, {2, 5}, {3, 5}, {4, 5}, {4, 5}}), 3));
  CHECK_FALSE(check_feasible(loads({1, 0, 0}), 2));
  CHECK(check_feasible(
      loads({{8, 11}, {1, 11}, {5, 11}, {8, 11}, 0, 0}), 2));
  CHECK_THROWS_AS(check_feasible(loads({{-1, 2}, 1}), 1),
                  std::invalid_argument);
}

TEST_CASE("fill reproduces the walkthrough assignments") {
  SUBCASE("five machines, one preempted") {
    auto plan = fill(loads({{2, 5}, {2, 5}, {3, 5}, 0, {4, 5}, {4, 5}}), 3);
    REQUIRE(plan.F == 4);
    CHECK(plan.alphas == std::vector<Rational>{{2, 5}, {1, 5}, {1, 5}, {1, 5}});
    CHECK(plan.sets[0] == std::vector<int>{1, 5, 6});
    CHECK(plan.sets[1] == std::vector<int>{2, 3, 6});
    CHECK(plan.sets[2] == std::vector<int>{2, 3, 5});
    CHECK(plan.sets[3] == std::vector<int>{3, 5, 6});
  }
  SUBCASE("exactly L machines left") {
    auto plan = fill(loads({0, 1, 1, 0, 1, 0}), 3);
    REQUIRE(plan.F == 1);
    CHECK(plan.alphas == std::vector<Rational>{1});
    CHECK(plan.sets[0] == std::vector<int>{2, 3, 5});
  }
  SUBCASE("all six machines") {
    auto plan = fill(loads({{1, 3}, {1, 3}, {1, 2}, {1, 2}, {2, 3}, {2, 3}}), 3);
    REQUIRE(plan.F == 4);
    CHECK(plan.alphas ==
          std::vector<Rational>{{1, 3}, {1, 3}, {1, 6}, {1, 6}});
    CHECK(plan.sets[0] == std::vector<int>{1, 5, 6});
    CHECK(plan.sets[1] == std::vector<int>{2, 3, 4});
    CHECK(plan.sets[2] == std::vector<int>{3, 5, 6});
    CHECK(plan.sets[3] == std::vector<int>{4, 5, 6});
  }
  SUBCASE("storage-capped fastest machine") {
    auto plan = fill(loads({{4, 7}, {4, 7}, {6, 7}, 0, 1, 0}), 3);
    REQUIRE(plan.F == 3);
    CHECK(plan.alphas == std::vector<Rational>{{3, 7}, {1, 7}, {3, 7}});
    CHECK(plan.sets[0] == std::vector<int>{1, 3, 5});
    CHECK(plan.sets[1] == std::vector<int>{1, 2, 5});
    CHECK(plan.sets[2] == std::vector<int>{2, 3, 5});
  }
}

TEST_CASE("fill rejects infeasible input") {
  CHECK_THROWS_AS(fill(loads({1, 0, 0}), 2), std::invalid_argument);
}

TEST_CASE("partial-compute split") {
  SUBCASE("heterogeneous storage walkthrough") {
    auto map = default_storage_map({2, 2, 2, 1, 1, 1});
    auto pp = plan_partials(
        loads({{8, 11}, {12, 11}, {16, 11}, {8, 11}, 1, 1}), map);
    CHECK(pp.Q_tilde[0].empty());
    CHECK(pp.Q_tilde[1] == std::vector<int>{3});
    CHECK(pp.Q_tilde[2] == std::vector<int>{5});
    CHECK(pp.Q_tilde[3].empty());
    CHECK(pp.Q_tilde[4] == std::vector<int>{8});
    CHECK(pp.Q_tilde[5] == std::vector<int>{9});
    CHECK(pp.theta_hat[0] == 1);
    CHECK(pp.theta_hat[1] == 4);
    CHECK(pp.theta_hat[2] == 6);
    CHECK(pp.theta_hat[3] == 7);
    CHECK_FALSE(pp.theta_hat[4].has_value());
    CHECK_FALSE(pp.theta_hat[5].has_value());
    CHECK(pp.mu_hat == std::vector<Rational>{{8, 11},
                                             {1, 11},
                                             {5, 11},
                                             {8, 11},
                                             0,
                                             0});
    CHECK(pp.L_hat == Rational(2));
  }
  SUBCASE("integer loads leave nothing partial") {
    auto pp = plan_partials(loads({1, 1, 1}), default_storage_map({1, 1, 1}));
    CHECK(pp.L_hat.is_zero());
    for (const auto& t : pp.theta_hat) CHECK_FALSE(t.has_value());
    for (const auto& m : pp.mu_hat) CHECK(m.is_zero());
  }
  SUBCASE("floor/fraction split on one machine") {
    auto pp = plan_partials(loads({{3, 2}}), default_storage_map({2}));
    CHECK(pp.Q_tilde[0] == std::vector<int>{1});
    CHECK(pp.theta_hat[0] == 2);
    CHECK(pp.mu_hat[0] == Rational(1, 2));
  }
}

TEST_CASE("heterogeneous fill reproduces the walkthrough cs-matrix sets") {
  auto map = default_storage_map({2, 2, 2, 1, 1, 1});
  auto plan = fill_heterogeneous(
      loads({{8, 11}, {12, 11}, {16, 11}, {8, 11}, 1, 1}), map, 6);
  REQUIRE(plan.F == 4);
  CHECK(plan.alphas ==
        std::vector<Rational>{{1, 11}, {3, 11}, {2, 11}, {5, 11}});
  CHECK(plan.sets[0] == std::vector<int>{3, 4, 5, 7, 8, 9});
  CHECK(plan.sets[1] == std::vector<int>{1, 3, 5, 6, 8, 9});
  CHECK(plan.sets[2] == std::vector<int>{3, 5, 6, 7, 8, 9});
  CHECK(plan.sets[3] == std::vector<int>{1, 3, 5, 7, 8, 9});
}

TEST_CASE("heterogeneous fill reduces to plain fill when sigma is all 1") {
  auto mu = loads({{2, 5}, {2, 5}, {3, 5}, 0, {4, 5}, {4, 5}});
  auto direct = fill(mu, 3);
  auto hetero = fill_heterogeneous(mu, default_storage_map({1, 1, 1, 1, 1, 1}), 3);
  CHECK(direct.F == hetero.F);
  CHECK(direct.alphas == hetero.alphas);
  CHECK(direct.sets == hetero.sets);  // Q_n = {n}, so indices coincide
}

TEST_CASE("all-integer loads take the single-set branch") {
  auto plan = fill_heterogeneous(loads({1, 1, 1, 1, 1, 1}),
                                 default_storage_map({1, 1, 1, 1, 1, 1}), 6);
  REQUIRE(plan.F == 1);
  CHECK(plan.alphas == std::vector<Rational>{1});
  CHECK(plan.sets[0] == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("fill properties on random feasible loads") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int L = 0;
    LoadVector mu = cec::testing::random_feasible_loads(rng, L);
    FillTrace trace;
    auto plan = fill(mu, L, &trace);

    CHECK(verify_fill(mu, L, plan).empty());

    // Feasibility loop invariant at each iteration boundary.
    for (const auto& step : trace) {
      Rational bound = step.load_left / Rational(L);
      for (const auto& m : step.remaining) CHECK(m <= bound);
      CHECK(step.alpha > Rational(0));
    }
    int available = 0;
    for (const auto& v : mu.mu)
      if (!v.is_zero()) ++available;
    CHECK(plan.F <= available);
  }
}

TEST_CASE("optimizer output is always fillable") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    Scenario sc = cec::testing::random_instance(rng);
    auto map = default_storage_map(sc.sigma);
    auto sol = solve_load(sc, sc.events[0]);
    auto plan = fill_heterogeneous(sol.mu_star, map, sc.L);
    CHECK(verify_assignment(sol.mu_star, map, sc.events[0], sc.L, plan)
              .empty());
  }
}
