#pragma once

// Graph encodings of INTERSECT(SC_{k,p+1}).
//
// Columns 0 .. 2p+2 of k vertices each. The left chase runs from u = (0, 0)
// to the middle column p+1, its innermost function on edges 0 -> 1 and its
// outermost on p -> p+1. The right chase mirrors it from v = (2p+2, 0).
// The stream lists player P_1's edges first (left outermost, next to the
// middle), then P_2, ..., P_{p+1}, then P_{p+2} (right outermost), ...,
// P_{2p+2}; each player's block is sorted by (u, v). Edges are written
// with the lower column first.

#include <cstddef>

#include "chase/game.hpp"
#include "chase/graph_stream.hpp"

namespace chase {

/// Vertex numbering of the distance and reachability gadgets.
struct GadgetLayout {
  std::size_t k = 0;
  std::size_t p = 0;  ///< pass parameter; the instance has p+1 layers a side

  std::size_t columns() const noexcept { return 2 * p + 3; }
  std::size_t num_vertices() const noexcept { return columns() * k; }
  Vertex id(std::size_t column, std::size_t slot) const {
    return static_cast<Vertex>(column * k + slot);
  }
  Vertex source() const { return id(0, 0); }
  Vertex target() const { return id(columns() - 1, 0); }
};

/// Vertex numbering of the matching gadget: end columns as above, every
/// internal column split into an in-copy and an out-copy joined by a
/// matching edge, and pendant partners for every end-column vertex except
/// u and v. num_vertices = k(4p+6) - 2.
struct MatchingLayout {
  std::size_t k = 0;
  std::size_t p = 0;

  std::size_t last_column() const noexcept { return 2 * p + 2; }
  std::size_t num_vertices() const noexcept { return k * (4 * p + 6) - 2; }
  /// Vertex a layer edge enters at (column, slot).
  Vertex in(std::size_t column, std::size_t slot) const;
  /// Vertex a layer edge leaves from at (column, slot).
  Vertex out(std::size_t column, std::size_t slot) const;
  /// Pendant partner of end-column vertex (column, slot), slot >= 1.
  Vertex pendant(std::size_t column, std::size_t slot) const;
  Vertex source() const { return in(0, 0); }
  Vertex target() const { return in(last_column(), 0); }
};

/// Pass parameter p for an instance with p+1 layers per side.
std::size_t gadget_pass_param(const IntersectScInstance& inst);

/// Undirected; dist(u, v) <= 2(p+1) iff the final sets intersect, and every
/// u-v path has length >= 2p+2.
GraphStream build_distance_gadget(const IntersectScInstance& inst);

/// Same edges directed toward increasing column; v reachable from u iff the
/// final sets intersect.
GraphStream build_reachability_gadget(const IntersectScInstance& inst);

/// Undirected bipartite graph with a perfect matching iff the final sets
/// intersect. The matching edges come first in the stream and cover every
/// vertex except u and v.
GraphStream build_matching_gadget(const IntersectScInstance& inst);

}  // namespace chase
