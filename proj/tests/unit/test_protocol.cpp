#include <gtest/gtest.h>

#include <vector>

#include "chase/errors.hpp"
#include "chase/protocol.hpp"
#include "chase/verify.hpp"
#include "support/naive.hpp"

using namespace chase;

namespace {

SetFunctionTable sets(std::vector<IndexSet> image) { return SetFunctionTable(std::move(image)); }

// Final sets {1} and {2}.
IntersectScInstance disjoint_instance() {
  const ScInstance to1({sets({{}, {1}, {}, {}}), sets({{1}, {}, {}, {}})});
  const ScInstance to2({sets({{}, {}, {}, {2}}), sets({{3}, {}, {}, {}})});
  return IntersectScInstance(to1, to2);
}

}  // namespace

TEST(Schedule, StandardAndCustom) {
  const auto s = Schedule::standard(3, 2);
  ASSERT_EQ(s.turns().size(), 6U);
  EXPECT_EQ(s.turns()[4], (Turn{2, 2}));
  EXPECT_EQ(s.last_turn(), (Turn{2, 3}));
  EXPECT_EQ(Schedule::custom(3, {{3, 1}}).last_turn(), (Turn{1, 1}));
  EXPECT_THROW(Schedule::custom(2, {{1, 1}}), ProtocolError);
  EXPECT_THROW(Schedule::custom(2, {{3}}), ProtocolError);
  EXPECT_THROW(Schedule::standard(0, 1), ProtocolError);
}

TEST(RunProtocol, TwoPlayersOneRound) {
  const Strategy<int> say_zero{[](const int&, Turn, const Transcript&) { return BitString("0"); },
                               [](const int& own, const Transcript& board) {
                                 return own == 1 && board.total_bits() == 2;
                               }};
  const std::vector<Strategy<int>> strategies{say_zero, say_zero};
  const std::vector<int> inputs{0, 1};
  const auto result = run_protocol<int>(Schedule::standard(2, 1), strategies, inputs);
  EXPECT_EQ(result.transcript.total_bits(), 2U);
  EXPECT_TRUE(result.answer);
}

TEST(Blackboard, RejectsOffScheduleAndMalformed) {
  Blackboard board(Schedule::standard(2, 1));
  EXPECT_THROW(board.post({1, 2}, "0"), ProtocolError);
  EXPECT_THROW(board.post({1, 1}, ""), ProtocolError);
  EXPECT_THROW(board.post({1, 1}, "012"), ProtocolError);
  board.post({1, 1}, "01");
  board.post({1, 2}, "1");
  EXPECT_TRUE(board.done());
  EXPECT_THROW(board.post({2, 1}, "0"), ProtocolError);
  EXPECT_EQ(board.transcript().at({1, 1}), "01");
  EXPECT_THROW(board.transcript().at({2, 1}), ProtocolError);
}

TEST(EncodeSet, Bitmap) {
  EXPECT_EQ(encode_set({0, 3}, 5), "10010");
  EXPECT_EQ(decode_set("10010"), (IndexSet{0, 3}));
  EXPECT_THROW(encode_set({5}, 5), DomainError);
}

TEST(ForwardProtocol, IdentityAndDisjoint) {
  const auto ident = forward_sc_protocol(identity_intersect_sc(8, 2));
  EXPECT_TRUE(ident.answer);
  EXPECT_FALSE(forward_sc_protocol(disjoint_instance()).answer);
}

TEST(ForwardProtocol, CountsForN8P2) {
  Rng rng(4);
  const auto inst = sample_random_intersect_sc(8, 2, 0.3, rng);
  const auto result = forward_sc_protocol(inst);
  EXPECT_EQ(result.answer, naive::intersects(inst));
  EXPECT_EQ(result.transcript.rounds_used(), 2U);
  // Round 1: P_2 and P_4 post sets; round 2: P_1 and P_3.
  std::size_t set_bits = 0;
  std::size_t placeholder_bits = 0;
  for (const auto& m : result.transcript.messages()) {
    const bool set_turn = (m.turn.round == 1 && (m.turn.player == 2 || m.turn.player == 4)) ||
                          (m.turn.round == 2 && (m.turn.player == 1 || m.turn.player == 3));
    (set_turn ? set_bits : placeholder_bits) += m.bits.size();
  }
  EXPECT_EQ(set_bits, 32U);
  EXPECT_EQ(placeholder_bits, 4U);
  EXPECT_EQ(result.transcript.total_bits(), 36U);
}

TEST(ReverseProtocol, OneRound) {
  EXPECT_TRUE(reverse_order_sc_protocol(identity_intersect_sc(8, 2)).answer);
  const auto disjoint = reverse_order_sc_protocol(disjoint_instance());
  EXPECT_FALSE(disjoint.answer);
  EXPECT_EQ(disjoint.transcript.rounds_used(), 1U);
  EXPECT_EQ(disjoint.transcript.total_bits(), 2U * 2U * 4U);
  // Speaking order P_4, P_3, P_2, P_1.
  std::vector<std::size_t> order;
  for (const auto& m : disjoint.transcript.messages()) order.push_back(m.turn.player);
  EXPECT_EQ(order, (std::vector<std::size_t>{4, 3, 2, 1}));

  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto inst = sample_random_intersect_sc(8, 2, 0.2, rng);
    EXPECT_EQ(reverse_order_sc_protocol(inst).answer, naive::intersects(inst));
  }
}

TEST(Protocols, ExhaustiveTiny) {
  ProtocolStats stats;
  for (std::size_t p : {1, 2}) {
    stats.merge(protocol_exhaustive(1, p));
    stats.merge(protocol_exhaustive(2, p));
  }
  stats.merge(protocol_exhaustive(3, 1));
  EXPECT_EQ(stats.instances, 4U + 256U + 16U + 65536U + 262144U);
  EXPECT_EQ(stats.violations(), 0U);
}

TEST(Protocols, TranscriptDumpRoundTrips) {
  Rng rng(6);
  const auto inst = sample_random_intersect_sc(5, 3, 0.3, rng);
  const auto a = forward_sc_protocol(inst);
  const auto b = forward_sc_protocol(inst);
  EXPECT_EQ(a.transcript.dump(), b.transcript.dump());
  const Transcript parsed = parse_transcript(a.transcript.dump());
  EXPECT_EQ(parsed.dump(), a.transcript.dump());
  EXPECT_EQ(parsed.total_bits(), a.transcript.total_bits());
  EXPECT_THROW(parse_transcript("1 1 bits:01\n1 x bits:0\n"), ParseError);
}
