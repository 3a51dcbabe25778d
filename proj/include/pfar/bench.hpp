#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfar/exact.hpp"
#include "pfar/ga.hpp"
#include "pfar/instance_gen.hpp"

namespace pfar {

struct BenchRow {
  int node_count = 0;
  int flow_count = 0;
  std::int64_t exact_objective = 0;
  double exact_secs = 0.0;
  bool exact_proven = false;
  std::int64_t ga_objective = 0;
  double ga_secs = 0.0;
  std::optional<double> ratio;  // ga/exact, only when exact is proven
  std::string error;            // nonempty if this row failed
};

struct BenchConfig {
  std::vector<int> sizes;
  std::uint64_t seed = 1;
  std::int64_t l0 = 30000;
  std::int64_t l1 = 10000;
  std::int64_t l2 = 2000;
  int max_path_len = 4;
  double ga_budget_secs = 10.0;
  double exact_limit_secs = 300.0;
  double ga_virtual_tick_secs = 0.0;
};

// One row per size: generate, solve exactly (time-limited), run the GA. Rows are
// handed to on_row as they finish; failures are recorded and the run continues.
std::vector<BenchRow> run_benchmark(const BenchConfig& cfg,
                                    const std::function<void(const BenchRow&)>& on_row = {});

struct BenchReport {
  std::string csv;
  std::string json;
};

// CSV header: nodes,flows,optimal,exact_s,proven,ga_value,ga_s,ratio.
// Ratio printed with 4 decimals, empty when the exact solve was not proven.
BenchReport emit_report(const std::vector<BenchRow>& rows);

}  // namespace pfar
