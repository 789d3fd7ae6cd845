#pragma once

// Offline ground truth for gadget properties.

#include <cstddef>
#include <optional>
#include <vector>

#include "chase/graph_stream.hpp"

namespace chase {

/// BFS distance from source to target, following edge direction when the
/// stream is directed. nullopt when unreachable.
std::optional<std::size_t> oracle_distance(const GraphStream& g);

/// DFS reachability from source to target.
bool oracle_reachable(const GraphStream& g);

/// Side (0/1) of every vertex, or nullopt when the graph has an odd cycle.
/// Edges are taken as undirected.
std::optional<std::vector<int>> two_color(const GraphStream& g);

/// Hopcroft-Karp maximum matching size. Throws DomainError on a
/// non-bipartite graph.
std::size_t maximum_matching_size(const GraphStream& g);

/// True iff the (bipartite) graph has a perfect matching.
bool oracle_perfect_matching(const GraphStream& g);

}  // namespace chase
