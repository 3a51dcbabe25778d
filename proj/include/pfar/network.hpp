#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfar/errors.hpp"

namespace pfar {

using NodeId = std::int32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed capacitated graph. Nodes are dense indices 0..node_count-1; edges are
// kept sorted by (src, dst), so out-edges of a node form a contiguous CSR range
// with destinations in ascending order.
class Network {
 public:
  Network() = default;

  // Validates: endpoints in range, no self-loops, no duplicate edges, capacities >= 1.
  Network(NodeId node_count, std::vector<std::pair<Edge, std::int64_t>> links);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::int64_t>& capacities() const { return capacities_; }

  const Edge& edge(std::size_t index) const { return edges_[index]; }
  std::int64_t capacity(std::size_t index) const { return capacities_[index]; }

  // Index of the edge in the sorted edge list, or npos if absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t edge_index(Edge e) const;
  bool has_edge(Edge e) const { return edge_index(e) != npos; }

  // Indices (into edges()) of the edges leaving node v, destination ascending.
  std::span<const std::size_t> out_edges(NodeId v) const;

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> capacities_;
  std::vector<std::size_t> out_index_;  // identity permutation; kept for span stability
  std::vector<std::size_t> out_begin_;  // CSR offsets, size node_count_+1
};

struct Flow {
  NodeId src = 0;
  NodeId dst = 0;
  std::int64_t bandwidth = 1;
  std::string header;  // fixed-width string of '0'/'1'
};

// Total map from packet headers to non-negative priorities: explicit table plus a
// default for headers not listed.
class PriorityFn {
 public:
  PriorityFn() = default;
  PriorityFn(std::map<std::string, std::int64_t> table, std::int64_t default_priority);

  std::int64_t lookup(const std::string& header) const {
    auto it = table_.find(header);
    return it == table_.end() ? default_priority_ : it->second;
  }

  std::int64_t default_priority() const { return default_priority_; }
  const std::map<std::string, std::int64_t>& table() const { return table_; }

 private:
  std::map<std::string, std::int64_t> table_;
  std::int64_t default_priority_ = 1;
};

// Sequence of chained directed edges; the empty path means DROP (do not admit).
struct Path {
  std::vector<Edge> edges;

  bool is_drop() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }
  std::vector<NodeId> node_sequence() const;

  friend auto operator<=>(const Path&, const Path&) = default;
};

// True iff the path is empty, or is simple, chained, starts at flow.src, ends at
// flow.dst, and uses only edges of the network.
bool validate_path(const Network& network, const Flow& flow, const Path& path);

}  // namespace pfar
