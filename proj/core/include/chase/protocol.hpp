#pragma once

// Blackboard protocols with fixed round schedules.
//
// Players and rounds are numbered from 1, matching the P_1 ... P_m naming of
// the games; every message is public and counted bit for bit.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chase/errors.hpp"
#include "chase/game.hpp"

namespace chase {

/// A message body: a non-empty string over {'0', '1'}.
using BitString = std::string;

struct Turn {
  std::size_t round = 0;
  std::size_t player = 0;
  bool operator==(const Turn&) const = default;
};

class Schedule {
 public:
  /// P_1 ... P_players, repeated `rounds` times.
  static Schedule standard(std::size_t players, std::size_t rounds);

  /// One speaking order per round; each player at most once per round.
  static Schedule custom(std::size_t players, std::vector<std::vector<std::size_t>> order);

  std::size_t players() const noexcept { return players_; }
  std::size_t rounds() const noexcept { return order_.size(); }
  const std::vector<std::vector<std::size_t>>& order() const noexcept { return order_; }

  /// Flattened turn sequence.
  std::vector<Turn> turns() const;
  Turn last_turn() const;

 private:
  Schedule(std::size_t players, std::vector<std::vector<std::size_t>> order);

  std::size_t players_;
  std::vector<std::vector<std::size_t>> order_;
};

struct Message {
  Turn turn;
  BitString bits;
};

class Transcript {
 public:
  void append(Message message);

  std::span<const Message> messages() const noexcept { return messages_; }
  std::size_t total_bits() const noexcept { return total_bits_; }
  /// Number of distinct rounds in which at least one message was posted.
  std::size_t rounds_used() const;

  /// Body of the message posted at `turn`; throws ProtocolError if none.
  const BitString& at(Turn turn) const;

  /// One line per message: "<round> <player> bits:<01-string>".
  std::string dump() const;

 private:
  std::vector<Message> messages_;
  std::size_t total_bits_ = 0;
};

/// Enforces the schedule: a post is accepted only from the next scheduled
/// speaker.
class Blackboard {
 public:
  explicit Blackboard(Schedule schedule);

  bool done() const noexcept { return next_ >= turns_.size(); }
  Turn next_turn() const;
  void post(Turn turn, BitString bits);

  const Schedule& schedule() const noexcept { return schedule_; }
  const Transcript& transcript() const noexcept { return transcript_; }

 private:
  Schedule schedule_;
  std::vector<Turn> turns_;
  std::size_t next_ = 0;
  Transcript transcript_;
};

template <class Input>
struct Strategy {
  /// Message for the player's scheduled turn.
  std::function<BitString(const Input& own, Turn turn, const Transcript& board)> speak;
  /// Output of the final scheduled speaker; unused for other players.
  std::function<bool(const Input& own, const Transcript& board)> decide;
};

struct ProtocolResult {
  bool answer = false;
  Transcript transcript;
};

/// Runs the schedule; strategies[i] and inputs[i] belong to player i+1.
template <class Input>
ProtocolResult run_protocol(const Schedule& schedule, std::span<const Strategy<Input>> strategies,
                            std::span<const Input> inputs) {
  if (strategies.size() != schedule.players() || inputs.size() != schedule.players()) {
    throw ProtocolError("run_protocol: need one strategy and one input per player");
  }
  Blackboard board(schedule);
  while (!board.done()) {
    const Turn turn = board.next_turn();
    const auto& strategy = strategies[turn.player - 1];
    board.post(turn, strategy.speak(inputs[turn.player - 1], turn, board.transcript()));
  }
  const std::size_t last = schedule.last_turn().player - 1;
  if (!strategies[last].decide) {
    throw ProtocolError("run_protocol: final speaker has no decision function");
  }
  ProtocolResult result;
  result.answer = strategies[last].decide(inputs[last], board.transcript());
  result.transcript = board.transcript();
  return result;
}

/// n-bit bitmap: character x is '1' iff x is in the set.
BitString encode_set(const IndexSet& s, std::size_t n);
IndexSet decode_set(std::string_view bits);

/// 2p players, p rounds, standard order. In round k player P_{p-k+1} posts
/// the left reachable set and P_{2p-k+1} the right one; every other turn is
/// a 1-bit placeholder. P_{2p} answers.
ProtocolResult forward_sc_protocol(const IntersectScInstance& inst);

/// One round in order P_{2p}, ..., P_1; every player extends its side's
/// reachable set. P_1 answers.
ProtocolResult reverse_order_sc_protocol(const IntersectScInstance& inst);

/// Parses the dump format back into a transcript.
Transcript parse_transcript(std::string_view text);

}  // namespace chase
