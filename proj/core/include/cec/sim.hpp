#pragma once

#include <vector>

#include "cec/assignment.hpp"
#include "cec/load_optimizer.hpp"
#include "cec/mds.hpp"
#include "cec/scenario.hpp"

namespace cec {

/// Encoded data at rest: placed once, reused across every time step.
struct CodedStore {
  Generator gen;
  std::vector<CsMatrix> cs;  // cs[i-1] has index i
  StorageMap map;
};

/// Consecutive disjoint row ranges of [q/L], one per row set, sized by
/// largest-remainder apportionment of the alpha targets.
struct RowMaterialization {
  std::vector<std::int64_t> boundaries;  // F+1 cumulative indices, 0..q/L
  bool exact = true;  // every alpha_f * q/L was an integer

  std::int64_t size(int f) const {  // f in [1..F]
    return boundaries[f] - boundaries[f - 1];
  }
  /// 1-based inclusive range [first(f), last(f)]; empty when size(f) == 0.
  std::int64_t first(int f) const { return boundaries[f - 1] + 1; }
  std::int64_t last(int f) const { return boundaries[f]; }
};

struct StepReport {
  int t = 0;
  bool feasible = true;
  LoadVector mu;
  Rational c_hat;
  int k_star = 0;
  int F = 0;
  AssignmentPlan plan;  // sets hold cs-matrix indices
  RowMaterialization rows;
  std::vector<Rational> per_machine_time;  // mu[n]/s[n], length N
  bool decode_ok = false;
  bool executed = false;  // false for plan-only reports
};

struct RunOptions {
  bool fault_inject = false;  // corrupt one partial result per step
};

RowMaterialization materialize(const AssignmentPlan& plan, std::int64_t q,
                               int L);

CodedStore encode_store(const Scenario& sc, const FieldMatrix& X,
                        Fp p = kDefaultPrime);

/// Plan-only step: optimizer + filling + materialization, no field work.
StepReport plan_step(const Scenario& sc, const AvailabilitySet& avail);

/// Full step: plan, compute every assigned (cs-matrix, row) product, decode
/// each row from its L partial results, and verify against X * w directly.
StepReport run_step(const Scenario& sc, const CodedStore& store,
                    const AvailabilitySet& avail, const FieldMatrix& X,
                    const std::vector<Fp>& w, const RunOptions& opts = {});

/// Encodes X once, then runs each timeline event against its w vector.
std::vector<StepReport> run_timeline(const Scenario& sc, const FieldMatrix& X,
                                     const std::vector<std::vector<Fp>>& w_list,
                                     Fp p = kDefaultPrime,
                                     const RunOptions& opts = {});

}  // namespace cec
