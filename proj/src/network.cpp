#include "pfar/network.hpp"

#include <algorithm>

namespace pfar {

Network::Network(NodeId node_count, std::vector<std::pair<Edge, std::int64_t>> links)
    : node_count_(node_count) {
  if (node_count < 0) throw ParseError("negative node count");

  std::sort(links.begin(), links.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  edges_.reserve(links.size());
  capacities_.reserve(links.size());
  for (const auto& [edge, cap] : links) {
    if (edge.src < 0 || edge.src >= node_count || edge.dst < 0 || edge.dst >= node_count)
      throw ParseError("edge endpoint out of range");
    if (edge.src == edge.dst) throw ParseError("self-loop edge");
    if (!edges_.empty() && edges_.back() == edge) throw ParseError("duplicate edge");
    if (cap < 1) throw ParseError("edge capacity must be >= 1");
    edges_.push_back(edge);
    capacities_.push_back(cap);
  }

  out_index_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out_index_[i] = i;

  out_begin_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : edges_) ++out_begin_[static_cast<std::size_t>(e.src) + 1];
  for (std::size_t v = 1; v < out_begin_.size(); ++v) out_begin_[v] += out_begin_[v - 1];
}

std::size_t Network::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return npos;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const std::size_t> Network::out_edges(NodeId v) const {
  const std::size_t begin = out_begin_[static_cast<std::size_t>(v)];
  const std::size_t end = out_begin_[static_cast<std::size_t>(v) + 1];
  return {out_index_.data() + begin, end - begin};
}

PriorityFn::PriorityFn(std::map<std::string, std::int64_t> table, std::int64_t default_priority)
    : table_(std::move(table)), default_priority_(default_priority) {
  if (default_priority_ < 0) throw ParseError("negative default priority");
  for (const auto& [header, priority] : table_)
    if (priority < 0) throw ParseError("negative priority for header " + header);
}

std::vector<NodeId> Path::node_sequence() const {
  std::vector<NodeId> nodes;
  if (edges.empty()) return nodes;
  nodes.reserve(edges.size() + 1);
  nodes.push_back(edges.front().src);
  for (const Edge& e : edges) nodes.push_back(e.dst);
  return nodes;
}

bool validate_path(const Network& network, const Flow& flow, const Path& path) {
  if (path.is_drop()) return true;
  if (path.edges.front().src != flow.src) return false;
  if (path.edges.back().dst != flow.dst) return false;

  std::vector<NodeId> seen;
  seen.reserve(path.edges.size() + 1);
  seen.push_back(path.edges.front().src);
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const Edge& e = path.edges[i];
    if (i + 1 < path.edges.size() && e.dst != path.edges[i + 1].src) return false;
    if (!network.has_edge(e)) return false;
    if (std::find(seen.begin(), seen.end(), e.dst) != seen.end()) return false;
    seen.push_back(e.dst);
  }
  return true;
}

}  // namespace pfar
