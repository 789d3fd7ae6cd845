#include "chase/streaming.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "chase/errors.hpp"

namespace chase {
namespace {

void save_bitmap(BitBuffer& out, const std::vector<char>& bitmap) {
  for (char b : bitmap) out.write_bit(b != 0);
}

void load_bitmap(BitBuffer& in, std::vector<char>& bitmap) {
  for (auto& b : bitmap) b = in.read_bit() ? 1 : 0;
}

std::size_t count_set(const std::vector<char>& bitmap) {
  return static_cast<std::size_t>(std::count(bitmap.begin(), bitmap.end(), 1));
}

void checkpoint(StreamingAlgorithm& alg, RunReport& report) {
  BitBuffer state = alg.save_state();
  report.max_state_bits = std::max(report.max_state_bits, state.size_bits());
  state.rewind();
  alg.load_state(std::move(state));
}

class BidirectionalBfs final : public StreamingAlgorithm {
 public:
  explicit BidirectionalBfs(std::size_t bound) : bound_(bound) {}

  std::string_view name() const override { return "bidir-bfs"; }

  PassOutcome init(const StreamMetadata& meta) override {
    meta_ = meta;
    from_source_.assign(meta.num_vertices, 0);
    from_target_.assign(meta.num_vertices, 0);
    from_source_[meta.source] = 1;
    from_target_[meta.target] = 1;
    if (meta.source == meta.target) return true;
    if (bound_ == 0) return false;
    return std::nullopt;
  }

  void begin_pass(std::size_t) override {
    next_source_ = from_source_;
    next_target_ = from_target_;
    odd_hit_ = false;
  }

  void observe_edge(Vertex a, Vertex b) override {
    const bool undirected = !meta_.directed;
    if (from_source_[a] && from_target_[b]) odd_hit_ = true;
    if (undirected && from_source_[b] && from_target_[a]) odd_hit_ = true;
    if (from_source_[a]) next_source_[b] = 1;
    if (undirected && from_source_[b]) next_source_[a] = 1;
    if (from_target_[b]) next_target_[a] = 1;
    if (undirected && from_target_[a]) next_target_[b] = 1;
  }

  PassOutcome end_pass(std::size_t pass) override {
    from_source_.swap(next_source_);
    from_target_.swap(next_target_);
    // Balls now have radius `pass`. An odd hit is an edge between the
    // radius-(pass-1) balls: dist <= 2 pass - 1.
    if (odd_hit_) return true;
    if (2 * pass <= bound_) {
      for (std::size_t x = 0; x < from_source_.size(); ++x) {
        if (from_source_[x] && from_target_[x]) return true;
      }
    }
    if (pass >= (bound_ + 1) / 2) return false;
    return std::nullopt;
  }

  BitBuffer save_state() const override {
    BitBuffer out;
    save_bitmap(out, from_source_);
    save_bitmap(out, from_target_);
    return out;
  }

  void load_state(BitBuffer state) override {
    load_bitmap(state, from_source_);
    load_bitmap(state, from_target_);
  }

 private:
  std::size_t bound_;
  StreamMetadata meta_;
  std::vector<char> from_source_;
  std::vector<char> from_target_;
  std::vector<char> next_source_;
  std::vector<char> next_target_;
  bool odd_hit_ = false;
};

class ForwardBfs final : public StreamingAlgorithm {
 public:
  explicit ForwardBfs(std::size_t bound) : bound_(bound), unreached_(bound + 1) {}

  std::string_view name() const override { return "forward-bfs"; }

  PassOutcome init(const StreamMetadata& meta) override {
    meta_ = meta;
    level_.assign(meta.num_vertices, unreached_);
    level_[meta.source] = 0;
    if (meta.source == meta.target) return true;
    return std::nullopt;
  }

  void begin_pass(std::size_t) override { checksum_ = label_sum(); }

  void observe_edge(Vertex a, Vertex b) override {
    relax(a, b);
    if (!meta_.directed) relax(b, a);
  }

  PassOutcome end_pass(std::size_t) override {
    if (level_[meta_.target] <= bound_) return true;
    if (label_sum() == checksum_) return false;
    return std::nullopt;
  }

  BitBuffer save_state() const override {
    BitBuffer out;
    const unsigned width = bits_for(unreached_ + 1);
    for (std::size_t l : level_) out.write(l, width);
    return out;
  }

  void load_state(BitBuffer state) override {
    const unsigned width = bits_for(unreached_ + 1);
    for (auto& l : level_) l = state.read(width);
  }

 private:
  void relax(Vertex from, Vertex to) {
    if (level_[from] < bound_ && level_[from] + 1 < level_[to]) {
      level_[to] = level_[from] + 1;
    }
  }

  std::size_t label_sum() const { return std::accumulate(level_.begin(), level_.end(), std::size_t{0}); }

  std::size_t bound_;
  std::size_t unreached_;
  StreamMetadata meta_;
  std::vector<std::size_t> level_;
  std::size_t checksum_ = 0;
};

class UnionFind final : public StreamingAlgorithm {
 public:
  std::string_view name() const override { return "union-find"; }

  PassOutcome init(const StreamMetadata& meta) override {
    meta_ = meta;
    parent_.resize(meta.num_vertices);
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
    if (meta.source == meta.target) return true;
    return std::nullopt;
  }

  void begin_pass(std::size_t) override {}

  void observe_edge(Vertex a, Vertex b) override {
    const Vertex ra = find(a);
    const Vertex rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }

  PassOutcome end_pass(std::size_t) override { return find(meta_.source) == find(meta_.target); }

  BitBuffer save_state() const override {
    BitBuffer out;
    const unsigned width = bits_for(parent_.size());
    for (Vertex x : parent_) out.write(x, width);
    return out;
  }

  void load_state(BitBuffer state) override {
    const unsigned width = bits_for(parent_.size());
    for (auto& x : parent_) x = static_cast<Vertex>(state.read(width));
  }

 private:
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  StreamMetadata meta_;
  std::vector<Vertex> parent_;
};

class DirectedFrontier final : public StreamingAlgorithm {
 public:
  std::string_view name() const override { return "directed-frontier"; }

  PassOutcome init(const StreamMetadata& meta) override {
    meta_ = meta;
    reached_.assign(meta.num_vertices, 0);
    reached_[meta.source] = 1;
    if (meta.source == meta.target) return true;
    return std::nullopt;
  }

  void begin_pass(std::size_t) override { reached_before_ = count_set(reached_); }

  void observe_edge(Vertex a, Vertex b) override {
    if (reached_[a]) reached_[b] = 1;
    if (!meta_.directed && reached_[b]) reached_[a] = 1;
  }

  PassOutcome end_pass(std::size_t) override {
    if (reached_[meta_.target]) return true;
    if (count_set(reached_) == reached_before_) return false;
    return std::nullopt;
  }

  BitBuffer save_state() const override {
    BitBuffer out;
    save_bitmap(out, reached_);
    return out;
  }

  void load_state(BitBuffer state) override { load_bitmap(state, reached_); }

 private:
  StreamMetadata meta_;
  std::vector<char> reached_;
  std::size_t reached_before_ = 0;
};

}  // namespace

StreamMetadata metadata_of(const GraphStream& g) {
  return {g.directed, g.num_vertices, g.edges.size(), g.source, g.target, g.passes_hint};
}

RunReport run_streaming(StreamingAlgorithm& alg, const GraphStream& g, std::size_t pass_budget) {
  validate(g);
  RunReport report;
  PassOutcome outcome = alg.init(metadata_of(g));
  checkpoint(alg, report);
  for (std::size_t pass = 1; !outcome && pass <= pass_budget; ++pass) {
    alg.begin_pass(pass);
    report.passes_used = pass;
    for (const Edge& e : g.edges) {
      alg.observe_edge(e.u, e.v);
    }
    outcome = alg.end_pass(pass);
    checkpoint(alg, report);
  }
  report.answer = outcome;
  return report;
}

std::unique_ptr<StreamingAlgorithm> alg_bidirectional_bfs(std::size_t distance_bound) {
  return std::make_unique<BidirectionalBfs>(distance_bound);
}

std::unique_ptr<StreamingAlgorithm> alg_forward_bfs(std::size_t distance_bound) {
  return std::make_unique<ForwardBfs>(distance_bound);
}

std::unique_ptr<StreamingAlgorithm> alg_union_find() { return std::make_unique<UnionFind>(); }

std::unique_ptr<StreamingAlgorithm> alg_directed_frontier() {
  return std::make_unique<DirectedFrontier>();
}

std::unique_ptr<StreamingAlgorithm> make_algorithm(std::string_view name, const StreamMetadata& meta) {
  const std::size_t bound = 2 * (meta.passes_hint + 1);
  if (name == "bidir-bfs") return alg_bidirectional_bfs(bound);
  if (name == "forward-bfs") return alg_forward_bfs(bound);
  if (name == "union-find") return alg_union_find();
  if (name == "directed-frontier") return alg_directed_frontier();
  throw DomainError("unknown streaming algorithm '" + std::string(name) + "'");
}

}  // namespace chase
