#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chase {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Ordered edge sequence. Order is part of the value: two streams with the
/// same edge set in different order compare unequal.
struct GraphStream {
  bool directed = false;
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  Vertex source = 0;
  Vertex target = 0;
  /// Pass parameter p the stream was built for (distance bound 2(p+1)).
  std::size_t passes_hint = 0;

  bool operator==(const GraphStream&) const = default;
};

/// Throws DomainError on out-of-range endpoints or self-loops.
void validate(const GraphStream& g);

/// Same graph, edges in reverse stream order.
GraphStream reversed(const GraphStream& g);

/// "graphstream v1" text:
///   graphstream v1 <directed|undirected> nv=<N> ne=<M> src=<u> dst=<v> p=<p>
///   <u> <v>        (M lines, stream order)
std::string serialize_stream(const GraphStream& g);

/// Throws ParseError with the offending line number.
GraphStream parse_stream(std::string_view text);

}  // namespace chase
