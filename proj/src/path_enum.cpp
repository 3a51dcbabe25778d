#include "pfar/path_enum.hpp"

#include <map>
#include <utility>

namespace pfar {

namespace {

void extend(const Network& network, NodeId current, NodeId dst, int remaining,
            std::vector<Edge>& stack, std::vector<char>& visited, std::vector<Path>& out) {
  if (remaining == 0) return;
  for (std::size_t k : network.out_edges(current)) {
    const Edge e = network.edge(k);
    if (e.dst == dst) {
      stack.push_back(e);
      out.push_back(Path{stack});
      stack.pop_back();
      continue;
    }
    if (visited[static_cast<std::size_t>(e.dst)]) continue;
    visited[static_cast<std::size_t>(e.dst)] = 1;
    stack.push_back(e);
    extend(network, e.dst, dst, remaining - 1, stack, visited, out);
    stack.pop_back();
    visited[static_cast<std::size_t>(e.dst)] = 0;
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const Network& network, NodeId src, NodeId dst,
                                  const PathEnumConfig& cfg) {
  if (src == dst) throw SameEndpoints("path enumeration requires src != dst");
  if (src < 0 || src >= network.node_count() || dst < 0 || dst >= network.node_count())
    throw Error("path endpoint out of range");
  if (cfg.max_path_len < 1) throw Error("max_path_len must be >= 1");

  std::vector<Path> out;
  std::vector<Edge> stack;
  std::vector<char> visited(static_cast<std::size_t>(network.node_count()), 0);
  visited[static_cast<std::size_t>(src)] = 1;
  extend(network, src, dst, cfg.max_path_len, stack, visited, out);
  return out;
}

void attach_paths(PfarInstance& instance) {
  if (instance.paths_attached || !instance.paths.empty())
    throw Error("paths already attached");

  const PathEnumConfig cfg{instance.max_path_len};
  std::map<std::pair<NodeId, NodeId>, std::vector<Path>> cache;

  instance.paths.reserve(instance.flows.size());
  for (const Flow& flow : instance.flows) {
    const auto key = std::make_pair(flow.src, flow.dst);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, enumerate_paths(instance.network, flow.src, flow.dst, cfg)).first;
    instance.paths.push_back(it->second);
  }
  instance.paths_attached = true;
}

}  // namespace pfar
