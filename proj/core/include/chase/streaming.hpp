#pragma once

// Multipass streaming model with boundary-state accounting.
//
// An algorithm sees the edges once per pass, in stream order. Between passes
// the harness serializes its state, records the size in bits and loads it
// back, so whatever survives a pass boundary is exactly what was counted.
// Working memory inside a pass is not accounted.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "chase/bits.hpp"
#include "chase/graph_stream.hpp"

namespace chase {

struct StreamMetadata {
  bool directed = false;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  Vertex source = 0;
  Vertex target = 0;
  std::size_t passes_hint = 0;
};

StreamMetadata metadata_of(const GraphStream& g);

/// nullopt = continue; otherwise the answer bit.
using PassOutcome = std::optional<bool>;

class StreamingAlgorithm {
 public:
  virtual ~StreamingAlgorithm() = default;

  virtual std::string_view name() const = 0;
  /// May answer before the first pass (e.g. source == target).
  virtual PassOutcome init(const StreamMetadata& meta) = 0;
  virtual void begin_pass(std::size_t pass) = 0;
  virtual void observe_edge(Vertex u, Vertex v) = 0;
  virtual PassOutcome end_pass(std::size_t pass) = 0;

  virtual BitBuffer save_state() const = 0;
  virtual void load_state(BitBuffer state) = 0;
};

struct RunReport {
  /// nullopt when the pass budget ran out first.
  std::optional<bool> answer;
  std::size_t passes_used = 0;
  std::size_t max_state_bits = 0;
};

/// Pass i is charged when begin_pass(i) is called; an answer at end_pass(i)
/// costs i passes, an answer from init() costs none.
RunReport run_streaming(StreamingAlgorithm& alg, const GraphStream& g, std::size_t pass_budget);

/// Level-synchronous BFS from both endpoints; answers dist <= bound after at
/// most ceil(bound/2) passes.
std::unique_ptr<StreamingAlgorithm> alg_bidirectional_bfs(std::size_t distance_bound);

/// Single-source label relaxation in stream order; answers dist <= bound
/// once the target's label is within bound or labels stop changing.
std::unique_ptr<StreamingAlgorithm> alg_forward_bfs(std::size_t distance_bound);

/// One-pass union-find connectivity of source and target.
std::unique_ptr<StreamingAlgorithm> alg_union_find();

/// Directed reachability by per-pass frontier relaxation.
std::unique_ptr<StreamingAlgorithm> alg_directed_frontier();

/// Names accepted: bidir-bfs, forward-bfs, union-find, directed-frontier.
/// BFS variants use the distance bound 2(passes_hint + 1).
std::unique_ptr<StreamingAlgorithm> make_algorithm(std::string_view name, const StreamMetadata& meta);

}  // namespace chase
