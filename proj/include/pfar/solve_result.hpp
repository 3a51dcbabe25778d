#pragma once

#include <cstdint>

#include "pfar/instance.hpp"

namespace pfar {

struct SolveStats {
  std::int64_t nodes_explored = 0;
  double elapsed_secs = 0.0;
  std::int64_t bound = 0;  // upper bound on the optimum; equals objective when proven
};

struct SolveResult {
  RouteAssignment assignment;
  std::int64_t objective = 0;
  bool proven_optimal = false;
  SolveStats stats;
};

}  // namespace pfar
