#pragma once

#include <functional>
#include <optional>

#include "pfar/solve_result.hpp"

namespace pfar {

enum class BoundMode {
  // admitted + sum of undecided priorities.
  PrioritySum,
  // admitted + min over {priority sum, per-source and per-destination fractional
  // knapsacks on pooled residual out-/in-capacity}. Tighter and still admissible:
  // a simple path leaves its source (enters its destination) on exactly one edge,
  // so admitted flows grouped by endpoint can never exceed the pooled residual.
  Knapsack,
};

struct ExactConfig {
  std::optional<double> time_limit_secs;
  std::optional<std::int64_t> node_limit;
  BoundMode bound_mode = BoundMode::Knapsack;

  // Test hook: called at every expanded search node with (node bound, best
  // objective found in that node's subtree) after the subtree completes.
  std::function<void(std::int64_t bound, std::int64_t subtree_best)>* audit = nullptr;
};

// Exhaustive enumeration of all per-flow choices (each path or DROP), keeping the
// best feasible assignment. Guarded: product of (paths+1) over flows must not
// exceed 1e7. Oracle for the branch-and-bound solver.
SolveResult solve_brute_force(const PfarInstance& instance);

// Depth-first branch and bound over flows in non-increasing priority order (ties
// by flow index); at each level every feasible path in enumeration order, DROP
// last. The first descent therefore reproduces the greedy assignment.
SolveResult solve_exact(const PfarInstance& instance, const ExactConfig& cfg = {});

// Strict prioritization: solve each priority class in decreasing order on the
// residual network left by the classes above it, then merge. The merged objective
// may be below solve_exact's.
SolveResult solve_strict(const PfarInstance& instance, const ExactConfig& cfg = {});

}  // namespace pfar
