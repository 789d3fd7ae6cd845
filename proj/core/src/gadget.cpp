#include "chase/gadget.hpp"

#include <algorithm>
#include <functional>

#include "chase/errors.hpp"
#include "chase/oracles.hpp"

namespace chase {
namespace {

// Layer-edge endpoint: (column, slot) -> vertex id, separately for the tail
// (lower column) and head (higher column) of an edge.
using EndpointMap = std::function<Vertex(std::size_t column, std::size_t slot)>;

// One block of edges per player P_1 ... P_{2p+2}, in stream order.
std::vector<std::vector<Edge>> player_blocks(const IntersectScInstance& inst, const EndpointMap& tail,
                                             const EndpointMap& head) {
  const std::size_t layers = inst.p();  // p + 1
  const std::size_t p = layers - 1;
  const std::size_t k = inst.n();
  std::vector<std::vector<Edge>> blocks;
  blocks.reserve(2 * layers);

  // Left funcs[i] joins column p-i (x) to column p-i+1 (y in f(x)).
  for (std::size_t i = 0; i < layers; ++i) {
    const auto& f = inst.left.func(i);
    const std::size_t c = p - i;
    std::vector<Edge> block;
    for (std::size_t x = 0; x < k; ++x) {
      for (Index y : f(static_cast<Index>(x))) {
        block.push_back({tail(c, x), head(c + 1, y)});
      }
    }
    blocks.push_back(std::move(block));
  }
  // Right funcs[i] joins column p+2+i (x) to column p+1+i (y in g(x)).
  for (std::size_t i = 0; i < layers; ++i) {
    const auto& g = inst.right.func(i);
    const std::size_t c = p + 1 + i;
    std::vector<Edge> block;
    for (std::size_t x = 0; x < k; ++x) {
      for (Index y : g(static_cast<Index>(x))) {
        block.push_back({tail(c, y), head(c + 1, x)});
      }
    }
    blocks.push_back(std::move(block));
  }
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
  }
  return blocks;
}

GraphStream layered_gadget(const IntersectScInstance& inst, bool directed) {
  const GadgetLayout layout{inst.n(), gadget_pass_param(inst)};
  const EndpointMap id = [&](std::size_t c, std::size_t s) { return layout.id(c, s); };
  GraphStream g;
  g.directed = directed;
  g.num_vertices = layout.num_vertices();
  g.source = layout.source();
  g.target = layout.target();
  g.passes_hint = layout.p;
  for (auto& block : player_blocks(inst, id, id)) {
    g.edges.insert(g.edges.end(), block.begin(), block.end());
  }
  validate(g);
  return g;
}

}  // namespace

Vertex MatchingLayout::in(std::size_t column, std::size_t slot) const {
  if (column == 0) return static_cast<Vertex>(slot);
  if (column == last_column()) return static_cast<Vertex>(k * (4 * p + 3) + slot);
  return static_cast<Vertex>(k + (column - 1) * 2 * k + slot);
}

Vertex MatchingLayout::out(std::size_t column, std::size_t slot) const {
  if (column == 0 || column == last_column()) return in(column, slot);
  return static_cast<Vertex>(in(column, slot) + k);
}

Vertex MatchingLayout::pendant(std::size_t column, std::size_t slot) const {
  const std::size_t base = k * (4 * p + 4) + (column == 0 ? 0 : k - 1);
  return static_cast<Vertex>(base + slot - 1);
}

std::size_t gadget_pass_param(const IntersectScInstance& inst) { return inst.p() - 1; }

GraphStream build_distance_gadget(const IntersectScInstance& inst) {
  return layered_gadget(inst, false);
}

GraphStream build_reachability_gadget(const IntersectScInstance& inst) {
  return layered_gadget(inst, true);
}

GraphStream build_matching_gadget(const IntersectScInstance& inst) {
  const MatchingLayout layout{inst.n(), gadget_pass_param(inst)};
  const std::size_t k = layout.k;
  const std::size_t last = layout.last_column();

  std::vector<Edge> matching;
  for (std::size_t s = 1; s < k; ++s) {
    matching.push_back({layout.in(0, s), layout.pendant(0, s)});
    matching.push_back({layout.in(last, s), layout.pendant(last, s)});
  }
  for (std::size_t c = 1; c < last; ++c) {
    for (std::size_t s = 0; s < k; ++s) {
      matching.push_back({layout.in(c, s), layout.out(c, s)});
    }
  }
  std::sort(matching.begin(), matching.end());

  GraphStream g;
  g.directed = false;
  g.num_vertices = layout.num_vertices();
  g.source = layout.source();
  g.target = layout.target();
  g.passes_hint = layout.p;
  g.edges = std::move(matching);
  const EndpointMap tail = [&](std::size_t c, std::size_t s) { return layout.out(c, s); };
  const EndpointMap head = [&](std::size_t c, std::size_t s) { return layout.in(c, s); };
  for (auto& block : player_blocks(inst, tail, head)) {
    g.edges.insert(g.edges.end(), block.begin(), block.end());
  }
  validate(g);
  if (!two_color(g)) {
    throw DomainError("build_matching_gadget: construction is not bipartite");
  }
  return g;
}

}  // namespace chase
