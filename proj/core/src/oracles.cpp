#include "chase/oracles.hpp"

#include <limits>
#include <queue>

#include "chase/errors.hpp"

namespace chase {
namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency adjacency(const GraphStream& g, bool follow_direction) {
  Adjacency adj(g.num_vertices);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    if (!(follow_direction && g.directed)) {
      adj[e.v].push_back(e.u);
    }
  }
  return adj;
}

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

}  // namespace

std::optional<std::size_t> oracle_distance(const GraphStream& g) {
  validate(g);
  const Adjacency adj = adjacency(g, true);
  std::vector<std::size_t> dist(g.num_vertices, kUnset);
  std::queue<Vertex> queue;
  dist[g.source] = 0;
  queue.push(g.source);
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop();
    if (a == g.target) return dist[a];
    for (Vertex b : adj[a]) {
      if (dist[b] == kUnset) {
        dist[b] = dist[a] + 1;
        queue.push(b);
      }
    }
  }
  return std::nullopt;
}

bool oracle_reachable(const GraphStream& g) {
  validate(g);
  const Adjacency adj = adjacency(g, true);
  std::vector<char> seen(g.num_vertices, 0);
  std::vector<Vertex> stack{g.source};
  seen[g.source] = 1;
  while (!stack.empty()) {
    const Vertex a = stack.back();
    stack.pop_back();
    if (a == g.target) return true;
    for (Vertex b : adj[a]) {
      if (!seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return false;
}

std::optional<std::vector<int>> two_color(const GraphStream& g) {
  const Adjacency adj = adjacency(g, false);
  std::vector<int> side(g.num_vertices, -1);
  for (std::size_t start = 0; start < g.num_vertices; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Vertex> queue;
    queue.push(static_cast<Vertex>(start));
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop();
      for (Vertex b : adj[a]) {
        if (side[b] == -1) {
          side[b] = 1 - side[a];
          queue.push(b);
        } else if (side[b] == side[a]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::size_t maximum_matching_size(const GraphStream& g) {
  validate(g);
  const auto coloring = two_color(g);
  if (!coloring) {
    throw DomainError("maximum_matching_size: graph is not bipartite");
  }
  const auto& side = *coloring;
  const Adjacency adj = adjacency(g, false);
  const std::size_t nv = g.num_vertices;

  // Hopcroft-Karp with side-0 vertices as the free-side roots.
  std::vector<std::size_t> mate(nv, kUnset);
  std::vector<std::size_t> layer(nv, kUnset);

  const auto bfs = [&]() {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t a = 0; a < nv; ++a) {
      if (side[a] == 0 && mate[a] == kUnset) {
        layer[a] = 0;
        queue.push(a);
      } else {
        layer[a] = kUnset;
      }
    }
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop();
      for (Vertex b : adj[a]) {
        const std::size_t next = mate[b];
        if (next == kUnset) {
          found = true;
        } else if (layer[next] == kUnset) {
          layer[next] = layer[a] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the BFS layering.
  std::vector<std::size_t> cursor(nv, 0);
  const auto augment = [&](std::size_t root) {
    std::vector<std::size_t> path{root};
    while (!path.empty()) {
      const std::size_t a = path.back();
      if (cursor[a] == adj[a].size()) {
        layer[a] = kUnset;
        path.pop_back();
        continue;
      }
      const Vertex b = adj[a][cursor[a]++];
      const std::size_t next = mate[b];
      if (next == kUnset) {
        // Flip the alternating path root ... a, b.
        std::size_t free_vertex = b;
        for (std::size_t i = path.size(); i-- > 0;) {
          const std::size_t left = path[i];
          const std::size_t previous = mate[left];
          mate[left] = free_vertex;
          mate[free_vertex] = left;
          free_vertex = previous;
        }
        return true;
      }
      if (layer[next] == layer[a] + 1) {
        path.push_back(next);
      }
    }
    return false;
  };

  std::size_t matched = 0;
  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t a = 0; a < nv; ++a) {
      if (side[a] == 0 && mate[a] == kUnset && augment(a)) {
        ++matched;
      }
    }
  }
  return matched;
}

bool oracle_perfect_matching(const GraphStream& g) {
  return g.num_vertices % 2 == 0 && 2 * maximum_matching_size(g) == g.num_vertices;
}

}  // namespace chase
