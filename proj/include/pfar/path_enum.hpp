#pragma once

#include <vector>

#include "pfar/instance.hpp"

namespace pfar {

struct PathEnumConfig {
  int max_path_len = 4;  // edge-count bound, >= 1
};

// All simple src->dst paths with at most max_path_len edges, in ascending
// lexicographic order of their node sequences. Depth-first expansion in
// ascending neighbor order produces that order directly.
std::vector<Path> enumerate_paths(const Network& network, NodeId src, NodeId dst,
                                  const PathEnumConfig& cfg);

// Populates instance.paths for every flow; flows sharing (src, dst) get identical
// lists. A flow with no path within the hop limit simply gets an empty list.
void attach_paths(PfarInstance& instance);

}  // namespace pfar
