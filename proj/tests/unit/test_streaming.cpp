#include <gtest/gtest.h>

#include "chase/errors.hpp"
#include "chase/gadget.hpp"
#include "chase/oracles.hpp"
#include "chase/streaming.hpp"
#include "chase/verify.hpp"
#include "support/naive.hpp"

using namespace chase;

namespace {

SetFunctionTable sets(std::vector<IndexSet> image) { return SetFunctionTable(std::move(image)); }

IntersectScInstance connected_but_far() {
  const ScInstance left({sets({{0}, {0, 1}}), sets({{0}, {}})});
  const ScInstance right({sets({{1}, {}}), sets({{0}, {}})});
  return IntersectScInstance(left, right);
}

// Path 0 - 1 - ... - len with the edge farthest from the source first.
GraphStream far_first_path(std::size_t len) {
  GraphStream g;
  g.num_vertices = len + 1;
  g.target = static_cast<Vertex>(len);
  for (std::size_t i = len; i-- > 0;) g.edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return g;
}

RunReport run(std::unique_ptr<StreamingAlgorithm> alg, const GraphStream& g, std::size_t budget = 64) {
  return run_streaming(*alg, g, budget);
}

}  // namespace

TEST(BidirectionalBfs, IdentityGadgetHandTrace) {
  // Pass 1 grows {u} to column 1 and {v} to column 3; pass 2 meets at column 2.
  const auto g = build_distance_gadget(identity_intersect_sc(4, 2));
  const auto report = run(alg_bidirectional_bfs(4), g);
  EXPECT_EQ(report.answer, true);
  EXPECT_EQ(report.passes_used, 2U);
  EXPECT_EQ(report.max_state_bits, 2U * 20U);
}

TEST(BidirectionalBfs, SourceEqualsTargetNeedsNoPass) {
  GraphStream g;
  g.num_vertices = 3;
  g.edges = {{1, 2}};
  const auto report = run(alg_bidirectional_bfs(4), g);
  EXPECT_EQ(report.answer, true);
  EXPECT_EQ(report.passes_used, 0U);
}

TEST(BidirectionalBfs, OddDistanceAndBound) {
  const auto path = far_first_path(5);
  EXPECT_EQ(run(alg_bidirectional_bfs(5), path).answer, true);
  EXPECT_EQ(run(alg_bidirectional_bfs(5), path).passes_used, 3U);
  EXPECT_EQ(run(alg_bidirectional_bfs(4), path).answer, false);
  EXPECT_EQ(run(alg_bidirectional_bfs(4), path).passes_used, 2U);
  EXPECT_EQ(run(alg_bidirectional_bfs(0), path).answer, false);
}

TEST(BidirectionalBfs, FarButConnectedIsNo) {
  const auto g = build_distance_gadget(connected_but_far());
  ASSERT_EQ(naive::distance(g), 6U);
  const auto report = run(alg_bidirectional_bfs(4), g);
  EXPECT_EQ(report.answer, false);
  EXPECT_EQ(report.passes_used, 2U);
  EXPECT_EQ(run(alg_union_find(), g).answer, true);
  EXPECT_EQ(run(alg_forward_bfs(4), g).answer, false);
  EXPECT_EQ(run(alg_bidirectional_bfs(6), g).answer, true);
}

TEST(ForwardBfs, PassCountFollowsStreamOrder) {
  for (std::size_t len : {1, 4, 9}) {
    const auto adversarial = far_first_path(len);
    const auto a = run(alg_forward_bfs(len), adversarial);
    EXPECT_EQ(a.answer, true);
    EXPECT_EQ(a.passes_used, len);
    const auto b = run(alg_forward_bfs(len), reversed(adversarial));
    EXPECT_EQ(b.answer, true);
    EXPECT_EQ(b.passes_used, 1U);
  }
}

TEST(ForwardBfs, BudgetExhaustionIsUndecided) {
  const auto report = run(alg_forward_bfs(6), far_first_path(6), 2);
  EXPECT_FALSE(report.answer.has_value());
  EXPECT_EQ(report.passes_used, 2U);
}

TEST(ForwardBfs, GadgetPassCounts) {
  // Left half arrives far-side first, right half near-side first.
  const auto g = build_distance_gadget(identity_intersect_sc(4, 2));
  EXPECT_EQ(run(alg_forward_bfs(4), g).passes_used, 2U);
  EXPECT_EQ(run(alg_forward_bfs(4), reversed(g)).passes_used, 3U);
}

TEST(UnionFind, OnePassAndStateSize) {
  GraphStream g;
  g.num_vertices = 2;
  g.target = 1;
  g.edges = {{0, 1}};
  const auto report = run(alg_union_find(), g);
  EXPECT_EQ(report.answer, true);
  EXPECT_EQ(report.passes_used, 1U);
  EXPECT_EQ(report.max_state_bits, 2U);
  for (std::size_t n : {2, 16, 100, 1000}) EXPECT_DOUBLE_EQ(union_find_state_ratio(n), 1.0);
}

TEST(DirectedFrontier, StableFrontierAnswersNo) {
  const auto g = build_reachability_gadget(connected_but_far());
  const auto report = run(alg_directed_frontier(), g);
  EXPECT_EQ(report.answer, false);
  EXPECT_FALSE(oracle_reachable(g));
  const auto yes = build_reachability_gadget(identity_intersect_sc(3, 3));
  EXPECT_EQ(run(alg_directed_frontier(), yes).answer, true);
  EXPECT_EQ(run(alg_bidirectional_bfs(6), yes).answer, true);
}

TEST(Streaming, StateSurvivesReload) {
  const auto g = build_distance_gadget(connected_but_far());
  const auto meta = metadata_of(g);
  for (const char* name : {"bidir-bfs", "forward-bfs", "union-find", "directed-frontier"}) {
    auto a = make_algorithm(name, meta);
    auto b = make_algorithm(name, meta);
    ASSERT_FALSE(a->init(meta).has_value());
    ASSERT_FALSE(b->init(meta).has_value());
    a->begin_pass(1);
    for (const Edge& e : g.edges) a->observe_edge(e.u, e.v);
    const auto outcome = a->end_pass(1);
    BitBuffer state = a->save_state();
    b->load_state(state);
    EXPECT_EQ(b->save_state(), state) << name;
    if (outcome) continue;
    a->begin_pass(2);
    b->begin_pass(2);
    for (const Edge& e : g.edges) {
      a->observe_edge(e.u, e.v);
      b->observe_edge(e.u, e.v);
    }
    EXPECT_EQ(a->end_pass(2), b->end_pass(2)) << name;
  }
}

TEST(Streaming, FactoryRejectsUnknownName) {
  EXPECT_THROW(make_algorithm("dfs", StreamMetadata{}), DomainError);
}

TEST(Streaming, ExhaustiveTinyGadgets) {
  auto stats = streaming_exhaustive(1, 2);
  stats.merge(streaming_exhaustive(2, 2));
  EXPECT_EQ(stats.violations(), 0U);
  const auto random = streaming_random(12, 3, 200, 31);
  EXPECT_EQ(random.violations(), 0U);
}
