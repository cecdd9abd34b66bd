#include "cec/sim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cec {

RowMaterialization materialize(const AssignmentPlan& plan, std::int64_t q,
                               int L) {
  if (L <= 0 || q % L != 0)
    throw std::invalid_argument("q must be divisible by L");
  const std::int64_t rows = q / L;

  RowMaterialization rm;
  std::vector<std::int64_t> sizes(plan.F, 0);
  std::vector<Rational> remainders(plan.F);
  std::int64_t assigned = 0;
  for (int f = 0; f < plan.F; ++f) {
    Rational target = plan.alphas[f] * Rational(rows);
    sizes[f] = target.floor();
    remainders[f] = target.frac();
    if (!remainders[f].is_zero()) rm.exact = false;
    assigned += sizes[f];
  }

  // Largest-remainder apportionment for the rows the floors left over;
  // ties go to the earlier row set.
  std::int64_t leftover = rows - assigned;
  std::vector<int> order(plan.F);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&remainders](int a, int b) {
    return remainders[b] < remainders[a];
  });
  for (int i = 0; i < leftover; ++i) ++sizes[order[i]];

  rm.boundaries.push_back(0);
  for (int f = 0; f < plan.F; ++f)
    rm.boundaries.push_back(rm.boundaries.back() + sizes[f]);
  return rm;
}

CodedStore encode_store(const Scenario& sc, const FieldMatrix& X, Fp p) {
  if (static_cast<std::int64_t>(X.rows) != sc.q ||
      static_cast<std::int64_t>(X.cols) != sc.r)
    throw std::invalid_argument("matrix does not match scenario dimensions");
  CodedStore store;
  store.gen = build_generator(sc.Z, sc.L, p);
  store.cs = encode(X, store.gen);
  store.map = default_storage_map(sc.sigma);
  return store;
}

namespace {

StepReport plan_step_with_map(const Scenario& sc, const StorageMap& map,
                              const AvailabilitySet& avail) {
  StepReport rep;
  rep.t = avail.t;
  if (avail.available.empty() || sc.stored_at(avail) < sc.L) {
    rep.feasible = false;
    return rep;
  }
  OptimizerSolution sol = solve_load(sc, avail);
  rep.mu = sol.mu_star;
  rep.c_hat = sol.c_hat;
  rep.k_star = sol.k_star;
  rep.plan = fill_heterogeneous(sol.mu_star, map, sc.L);
  rep.F = rep.plan.F;
  rep.rows = materialize(rep.plan, sc.q, sc.L);
  for (int n = 0; n < sc.N; ++n)
    rep.per_machine_time.push_back(rep.mu[n] / sc.s[n]);
  return rep;
}

}  // namespace

StepReport plan_step(const Scenario& sc, const AvailabilitySet& avail) {
  return plan_step_with_map(sc, default_storage_map(sc.sigma), avail);
}

StepReport run_step(const Scenario& sc, const CodedStore& store,
                    const AvailabilitySet& avail, const FieldMatrix& X,
                    const std::vector<Fp>& w, const RunOptions& opts) {
  StepReport rep = plan_step_with_map(sc, store.map, avail);
  if (!rep.feasible) return rep;

  const Fp p = store.gen.p;
  const std::int64_t block = sc.q / sc.L;
  bool faulted = false;

  // y holds the decoded X_l * w blocks, assembled into X * w order.
  std::vector<Fp> y(sc.q, 0);
  for (int f = 1; f <= rep.F; ++f) {
    std::vector<std::int64_t> row_indices;
    for (std::int64_t j = rep.rows.first(f); j <= rep.rows.last(f); ++j)
      row_indices.push_back(j);
    if (row_indices.empty()) continue;

    const std::vector<int>& cs_set = rep.plan.sets[f - 1];
    std::vector<std::vector<PartialResult>> per_cs;
    for (int i : cs_set) {
      auto partials = worker_compute(store.cs.at(i - 1), row_indices, w, p);
      if (opts.fault_inject && !faulted && !partials.empty()) {
        partials.front().value = fp_add(partials.front().value, 1, p);
        faulted = true;
      }
      per_cs.push_back(std::move(partials));
    }

    Decoder decoder(store.gen, cs_set);  // one inversion per distinct P_f
    for (std::size_t k = 0; k < row_indices.size(); ++k) {
      std::vector<Fp> values;
      for (const auto& partials : per_cs) values.push_back(partials[k].value);
      std::vector<Fp> decoded = decoder.decode(values);
      for (int l = 0; l < sc.L; ++l)
        y[l * block + row_indices[k] - 1] = decoded[l];
    }
  }

  FieldMatrix expect = mat_vec(X, w, p);
  rep.decode_ok = true;
  for (std::int64_t i = 0; i < sc.q; ++i)
    if (y[i] != expect.at(i, 0)) {
      rep.decode_ok = false;
      break;
    }
  rep.executed = true;
  return rep;
}

std::vector<StepReport> run_timeline(const Scenario& sc, const FieldMatrix& X,
                                     const std::vector<std::vector<Fp>>& w_list,
                                     Fp p, const RunOptions& opts) {
  if (w_list.size() != sc.events.size())
    throw std::invalid_argument("need one w vector per time step");
  CodedStore store = encode_store(sc, X, p);  // placed once, never re-encoded
  std::vector<StepReport> reports;
  for (std::size_t i = 0; i < sc.events.size(); ++i)
    reports.push_back(run_step(sc, store, sc.events[i], X, w_list[i], opts));
  return reports;
}

}  // namespace cec
