#include "pfar/instance.hpp"

#include <algorithm>
#include <queue>

namespace pfar {

std::int64_t PfarInstance::total_priority() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < flows.size(); ++i) sum += priority_of(i);
  return sum;
}

namespace {

void require_complete(const PfarInstance& instance, const RouteAssignment& assignment) {
  if (assignment.choice.size() != instance.flows.size())
    throw AssignmentIncomplete("assignment covers " + std::to_string(assignment.choice.size()) +
                               " of " + std::to_string(instance.flows.size()) + " flows");
}

// nullptr when the choice is DROP or references no stored path.
const Path* chosen_path(const PfarInstance& instance, const RouteAssignment& assignment,
                        std::size_t flow_index) {
  const std::int32_t m = assignment.choice[flow_index];
  if (m == RouteAssignment::kDrop) return nullptr;
  if (m < 0 || static_cast<std::size_t>(m) >= instance.paths[flow_index].size()) return nullptr;
  return &instance.paths[flow_index][static_cast<std::size_t>(m)];
}

}  // namespace

CheckReport check_solution(const PfarInstance& instance, const RouteAssignment& assignment) {
  require_complete(instance, assignment);

  CheckReport report;
  report.objective = objective_value(instance, assignment);

  std::vector<std::int64_t> load(instance.network.edge_count(), 0);
  for (std::size_t i = 0; i < instance.flows.size(); ++i) {
    if (assignment.is_drop(i)) continue;
    const Path* path = chosen_path(instance, assignment, i);
    if (path == nullptr || !validate_path(instance.network, instance.flows[i], *path)) {
      report.violations.push_back({Violation::Kind::PathInvalid,
                                   static_cast<std::int32_t>(i), Edge{}, 0});
      continue;
    }
    for (const Edge& e : path->edges)
      load[instance.network.edge_index(e)] += instance.flows[i].bandwidth;
  }

  for (std::size_t k = 0; k < instance.network.edge_count(); ++k) {
    if (load[k] > instance.network.capacity(k))
      report.violations.push_back({Violation::Kind::CapacityExceeded, -1,
                                   instance.network.edge(k), load[k]});
  }

  report.valid = report.violations.empty();
  return report;
}

std::int64_t objective_value(const PfarInstance& instance, const RouteAssignment& assignment) {
  require_complete(instance, assignment);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < instance.flows.size(); ++i)
    if (!assignment.is_drop(i)) sum += instance.priority_of(i);
  return sum;
}

std::vector<std::int64_t> residual_capacities(const PfarInstance& instance,
                                              const RouteAssignment& assignment) {
  require_complete(instance, assignment);
  std::vector<std::int64_t> residual = instance.network.capacities();
  for (std::size_t i = 0; i < instance.flows.size(); ++i) {
    const Path* path = chosen_path(instance, assignment, i);
    if (path == nullptr) continue;
    for (const Edge& e : path->edges) {
      const std::size_t k = instance.network.edge_index(e);
      if (k != Network::npos) residual[k] -= instance.flows[i].bandwidth;
    }
  }
  return residual;
}

namespace {

std::size_t reachable_count(NodeId node_count, const std::vector<std::vector<NodeId>>& adj,
                            NodeId start) {
  std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
  std::queue<NodeId> frontier;
  frontier.push(start);
  seen[static_cast<std::size_t>(start)] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (NodeId w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        frontier.push(w);
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Network& network) {
  const NodeId n = network.node_count();
  if (n <= 1) return true;

  std::vector<std::vector<NodeId>> forward(static_cast<std::size_t>(n));
  std::vector<std::vector<NodeId>> backward(static_cast<std::size_t>(n));
  for (const Edge& e : network.edges()) {
    forward[static_cast<std::size_t>(e.src)].push_back(e.dst);
    backward[static_cast<std::size_t>(e.dst)].push_back(e.src);
  }

  const auto all = static_cast<std::size_t>(n);
  return reachable_count(n, forward, 0) == all && reachable_count(n, backward, 0) == all;
}

}  // namespace pfar
