#pragma once

#include <filesystem>
#include <string>

#include "pfar/ga.hpp"
#include "pfar/ilp.hpp"
#include "pfar/instance.hpp"
#include "pfar/solve_result.hpp"

namespace pfar {

// JSON schema:
// {
//   "nodes": 4,
//   "edges": [{"src": 0, "dst": 1, "cap": 2}, ...],
//   "flows": [{"src": 0, "dst": 1, "bw": 2, "header": "01..", "priority": 10}, ...],
//   "max_path_len": 3,
//   "header_width": 32,          (optional)
//   "default_priority": 1,       (optional)
//   "priority_table": {"01..": 7, ...},  (optional)
//   "meta": {"k": "v", ...}      (optional)
// }
// Flow "header" defaults to the flow index in binary; inline "priority" entries are
// recorded in the priority table under the flow's header. Flows with src == dst are
// rejected. Paths are not part of the schema; callers attach them.
PfarInstance parse_instance_json(const std::string& text);
std::string instance_to_json(const PfarInstance& instance);

PfarInstance load_instance_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// Solution JSON: routes[i] is the chosen path's node sequence or null for DROP.
// Stats carry only deterministic fields (wall time goes to logs, not artifacts).
std::string solution_to_json(const PfarInstance& instance, const SolveResult& result);
std::string ga_solution_to_json(const PfarInstance& instance, const GaRun& run);

// Per-generation CSV: generation,best_fitness,mr,cr,elapsed_ms.
std::string ga_stats_csv(const GaStats& stats);

}  // namespace pfar
