#pragma once

#include <cstdint>
#include <vector>

#include "pfar/instance.hpp"

namespace pfar {

struct TopoConfig {
  NodeId node_count = 11;
  std::int64_t l0 = 30000;  // root <-> level-1 scale (default: 30 Mbps as kbps)
  std::int64_t l1 = 10000;  // level-1 <-> level-2 scale
  std::int64_t l2 = 2000;   // mesh scale; also the flow-size scale
  std::uint64_t seed = 1;
};

struct FlowGenConfig {
  std::vector<std::int64_t> priority_levels = {1, 10, 100, 1000, 10000};
  std::vector<double> priority_weights = {0.50, 0.27, 0.13, 0.07, 0.03};
  std::uint64_t seed = 1;
};

struct GeneratedFlow {
  Flow flow;
  std::int64_t priority = 1;
};

// Double-star topology with a bus across level 1, a small mesh around the first
// sub-cluster, and leftover nodes hung off the root. n = floor of the positive
// root of N = n^2 + n + 1; every capacity is floor(level / rand(1,10)) (halved for
// return links where the scheme says so), clamped to >= 1. Always connected.
Network gen_topology(const TopoConfig& cfg);

// Per node: flows to uniformly random other destinations, each with bandwidth
// uniform in [max(1, l2/(2r)), max(1, l2/r - 1)] for a fresh r in 1..10, priority
// sampled from (levels, weights), until the node's total demand strictly exceeds
// its outgoing capacity (the exceeding flow is kept).
std::vector<GeneratedFlow> gen_flows(const Network& network, std::int64_t l2,
                                     const FlowGenConfig& cfg);

// gen_topology + gen_flows + attach_paths; headers encode the flow index, priorities
// are recorded in the instance's priority table.
PfarInstance gen_instance(const TopoConfig& topo_cfg, const FlowGenConfig& flow_cfg,
                          int max_path_len);

}  // namespace pfar
