#include "chase/protocol.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace chase {

Schedule::Schedule(std::size_t players, std::vector<std::vector<std::size_t>> order)
    : players_(players), order_(std::move(order)) {}

Schedule Schedule::standard(std::size_t players, std::size_t rounds) {
  if (players == 0 || rounds == 0) {
    throw ProtocolError("Schedule: players and rounds must be positive");
  }
  std::vector<std::size_t> round(players);
  for (std::size_t i = 0; i < players; ++i) round[i] = i + 1;
  return Schedule(players, std::vector<std::vector<std::size_t>>(rounds, round));
}

Schedule Schedule::custom(std::size_t players, std::vector<std::vector<std::size_t>> order) {
  if (players == 0 || order.empty()) {
    throw ProtocolError("Schedule: players and rounds must be positive");
  }
  for (const auto& round : order) {
    if (round.empty()) {
      throw ProtocolError("Schedule: a round must have at least one speaker");
    }
    std::set<std::size_t> seen;
    for (std::size_t player : round) {
      if (player == 0 || player > players) {
        throw ProtocolError("Schedule: player index out of range");
      }
      if (!seen.insert(player).second) {
        throw ProtocolError("Schedule: player speaks twice in one round");
      }
    }
  }
  return Schedule(players, std::move(order));
}

std::vector<Turn> Schedule::turns() const {
  std::vector<Turn> out;
  for (std::size_t r = 0; r < order_.size(); ++r) {
    for (std::size_t player : order_[r]) {
      out.push_back({r + 1, player});
    }
  }
  return out;
}

Turn Schedule::last_turn() const { return {order_.size(), order_.back().back()}; }

void Transcript::append(Message message) {
  total_bits_ += message.bits.size();
  messages_.push_back(std::move(message));
}

std::size_t Transcript::rounds_used() const {
  std::set<std::size_t> rounds;
  for (const auto& m : messages_) rounds.insert(m.turn.round);
  return rounds.size();
}

const BitString& Transcript::at(Turn turn) const {
  for (const auto& m : messages_) {
    if (m.turn == turn) return m.bits;
  }
  throw ProtocolError("Transcript: no message at round " + std::to_string(turn.round) +
                      ", player " + std::to_string(turn.player));
}

std::string Transcript::dump() const {
  std::ostringstream out;
  for (const auto& m : messages_) {
    out << m.turn.round << ' ' << m.turn.player << " bits:" << m.bits << '\n';
  }
  return out.str();
}

Blackboard::Blackboard(Schedule schedule)
    : schedule_(std::move(schedule)), turns_(schedule_.turns()) {}

Turn Blackboard::next_turn() const {
  if (done()) {
    throw ProtocolError("Blackboard: schedule exhausted");
  }
  return turns_[next_];
}

void Blackboard::post(Turn turn, BitString bits) {
  if (done() || !(turn == turns_[next_])) {
    throw ProtocolError("Blackboard: player " + std::to_string(turn.player) +
                        " posted at an unscheduled turn (round " + std::to_string(turn.round) +
                        ")");
  }
  if (bits.empty() || bits.find_first_not_of("01") != BitString::npos) {
    throw ProtocolError("Blackboard: message must be a non-empty 0/1 string");
  }
  transcript_.append({turn, std::move(bits)});
  ++next_;
}

BitString encode_set(const IndexSet& s, std::size_t n) {
  BitString bits(n, '0');
  for (Index x : s) {
    if (x >= n) throw DomainError("encode_set: element out of range");
    bits[x] = '1';
  }
  return bits;
}

IndexSet decode_set(std::string_view bits) {
  IndexSet s;
  for (std::size_t x = 0; x < bits.size(); ++x) {
    if (bits[x] == '1') s.push_back(static_cast<Index>(x));
  }
  return s;
}

namespace {

constexpr const char* kPlaceholder = "0";

std::vector<SetFunctionTable> player_inputs(const IntersectScInstance& inst) {
  std::vector<SetFunctionTable> inputs(inst.left.funcs().begin(), inst.left.funcs().end());
  inputs.insert(inputs.end(), inst.right.funcs().begin(), inst.right.funcs().end());
  return inputs;
}

bool final_sets_intersect(const Transcript& board, Turn left, Turn right) {
  return !intersect_sets(decode_set(board.at(left)), decode_set(board.at(right))).empty();
}

}  // namespace

ProtocolResult forward_sc_protocol(const IntersectScInstance& inst) {
  const std::size_t p = inst.p();
  const std::size_t n = inst.n();
  const auto inputs = player_inputs(inst);
  std::vector<Strategy<SetFunctionTable>> strategies(2 * p);
  for (std::size_t player = 1; player <= 2 * p; ++player) {
    const std::size_t offset = player <= p ? 0 : p;
    const std::size_t pos = player - offset;  // holds funcs[pos-1] of its side
    strategies[player - 1].speak = [=](const SetFunctionTable& own, Turn turn,
                                       const Transcript& board) -> BitString {
      if (pos != p - turn.round + 1) return kPlaceholder;
      const IndexSet reached =
          turn.round == 1 ? IndexSet{0} : decode_set(board.at({turn.round - 1, offset + pos + 1}));
      return encode_set(vec_apply(own, reached), n);
    };
  }
  strategies.back().decide = [=](const SetFunctionTable&, const Transcript& board) {
    return final_sets_intersect(board, {p, 1}, {p, p + 1});
  };
  return run_protocol<SetFunctionTable>(Schedule::standard(2 * p, p), strategies, inputs);
}

ProtocolResult reverse_order_sc_protocol(const IntersectScInstance& inst) {
  const std::size_t p = inst.p();
  const std::size_t n = inst.n();
  const auto inputs = player_inputs(inst);
  std::vector<std::size_t> order(2 * p);
  for (std::size_t i = 0; i < 2 * p; ++i) order[i] = 2 * p - i;

  std::vector<Strategy<SetFunctionTable>> strategies(2 * p);
  for (std::size_t player = 1; player <= 2 * p; ++player) {
    const std::size_t offset = player <= p ? 0 : p;
    const std::size_t pos = player - offset;
    strategies[player - 1].speak = [=](const SetFunctionTable& own, Turn,
                                       const Transcript& board) -> BitString {
      const IndexSet reached = pos == p ? IndexSet{0} : decode_set(board.at({1, offset + pos + 1}));
      return encode_set(vec_apply(own, reached), n);
    };
  }
  strategies.front().decide = [=](const SetFunctionTable&, const Transcript& board) {
    return final_sets_intersect(board, {1, 1}, {1, p + 1});
  };
  return run_protocol<SetFunctionTable>(Schedule::custom(2 * p, {order}), strategies, inputs);
}

Transcript parse_transcript(std::string_view text) {
  Transcript transcript;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    std::size_t round = 0;
    std::size_t player = 0;
    const char* p = line.data();
    const char* last = line.data() + line.size();
    auto r1 = std::from_chars(p, last, round);
    if (r1.ec != std::errc() || r1.ptr == last || *r1.ptr != ' ') {
      throw ParseError(line_no, "expected '<round> <player> bits:<01-string>'");
    }
    auto r2 = std::from_chars(r1.ptr + 1, last, player);
    const std::string_view rest(r2.ptr, static_cast<std::size_t>(last - r2.ptr));
    if (r2.ec != std::errc() || rest.substr(0, 6) != " bits:") {
      throw ParseError(line_no, "expected '<round> <player> bits:<01-string>'");
    }
    const std::string_view bits = rest.substr(6);
    if (bits.empty() || bits.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError(line_no, "message body must be a non-empty 0/1 string");
    }
    transcript.append({{round, player}, BitString(bits)});
  }
  return transcript;
}

}  // namespace chase
