#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pfar/network.hpp"

namespace pfar {

// A full problem instance: network, flows in lexicographic (index) order, the
// priority function, and the per-flow enumerated path lists once attached.
struct PfarInstance {
  Network network;
  std::vector<Flow> flows;
  PriorityFn priorities;
  int max_path_len = 4;
  int header_width = 32;

  std::vector<std::vector<Path>> paths;  // filled by attach_paths
  bool paths_attached = false;

  // Free-form provenance written by the generator, carried into the JSON artifact.
  std::map<std::string, std::string> meta;

  std::int64_t priority_of(std::size_t flow_index) const {
    return priorities.lookup(flows[flow_index].header);
  }

  // Sum of all flow priorities: the optimization bound (all flows admitted).
  std::int64_t total_priority() const;

  void require_paths() const {
    if (!paths_attached) throw PathsNotAttached("instance paths not attached");
  }
};

// Per-flow decision: the index of a path in that flow's enumerated list, or kDrop.
struct RouteAssignment {
  static constexpr std::int32_t kDrop = -1;

  std::vector<std::int32_t> choice;

  static RouteAssignment all_drop(std::size_t flow_count) {
    RouteAssignment a;
    a.choice.assign(flow_count, kDrop);
    return a;
  }

  bool is_drop(std::size_t flow_index) const { return choice[flow_index] == kDrop; }

  friend bool operator==(const RouteAssignment&, const RouteAssignment&) = default;
};

struct Violation {
  enum class Kind { PathInvalid, CapacityExceeded };

  Kind kind = Kind::PathInvalid;
  std::int32_t flow_index = -1;  // set for PathInvalid
  Edge edge{};                   // set for CapacityExceeded
  std::int64_t amount = 0;       // total load on the edge for CapacityExceeded
};

struct CheckReport {
  bool valid = false;
  std::int64_t objective = 0;
  std::vector<Violation> violations;
};

// Validates every chosen path and every link capacity; the objective counts all
// admitted flows whether or not the assignment is feasible.
CheckReport check_solution(const PfarInstance& instance, const RouteAssignment& assignment);

std::int64_t objective_value(const PfarInstance& instance, const RouteAssignment& assignment);

// capacity(e) minus routed bandwidth, parallel to network.edges(); negative entries
// mean the assignment overloads that edge.
std::vector<std::int64_t> residual_capacities(const PfarInstance& instance,
                                              const RouteAssignment& assignment);

// Strong connectivity (every node reachable from every node along directed edges).
bool is_connected(const Network& network);

}  // namespace pfar
