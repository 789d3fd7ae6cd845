#include <gtest/gtest.h>

#include "chase/errors.hpp"
#include "chase/game_io.hpp"

using namespace chase;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_scgame(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST(ScGame, RoundTripsEveryKind) {
  Rng rng(8);
  const std::vector<GameInstance> games{
      sample_uniform_pc(5, 3, rng),
      sample_random_sc(5, 2, 0.4, rng),
      sample_uniform_lpce(6, 2, 3, rng),
      sample_uniform_or_lpce(4, 2, 2, 3, rng),
      sample_random_intersect_sc(7, 3, 0.3, rng),
  };
  for (const auto& game : games) {
    const std::string text = write_scgame(game);
    const GameInstance back = parse_scgame(text);
    EXPECT_EQ(back, game) << text;
    EXPECT_EQ(write_scgame(back), text);
  }
}

TEST(ScGame, DegenerateN1) {
  Rng rng(1);
  const GameInstance game = sample_uniform_or_lpce(1, 1, 2, 1, rng);
  const std::string text = write_scgame(game);
  EXPECT_EQ(text,
            "scgame v1 kind=orlpce n=1 p=1 r=2 t=1\n"
            "table 0\n0: 0\n"
            "table 1\n0: 0\n");
  EXPECT_EQ(parse_scgame(text), game);
}

TEST(ScGame, SetTablesAllowEmptyRows) {
  const std::string text =
      "scgame v1 kind=sc n=3 p=1\n"
      "table 0\n"
      "0: 1 2\n"
      "1:\n"
      "2: 0\n";
  const auto game = parse_scgame(text);
  const auto& sc = std::get<ScInstance>(game);
  EXPECT_EQ(sc.func(0)(1), IndexSet{});
  EXPECT_EQ(write_scgame(game), text);
}

TEST(ScGame, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("scgame v2 kind=pc n=1 p=1\n"), 1);
  EXPECT_EQ(parse_error_line("scgame v1 kind=pc n=2 p=1 r=3\n"), 1);
  EXPECT_EQ(parse_error_line("scgame v1 kind=pc n=2 p=1\ntable 0\n0: 1\n1: 2\n"), 4);
  EXPECT_EQ(parse_error_line("scgame v1 kind=pc n=2 p=1\ntable 0\n0: 1\n1: 0 1\n"), 4);
  EXPECT_EQ(parse_error_line("scgame v1 kind=sc n=3 p=1\ntable 0\n0: 2 1\n1:\n2:\n"), 3);
  EXPECT_EQ(parse_error_line("scgame v1 kind=sc n=2 p=1\ntable 1\n0:\n1:\n"), 2);
  EXPECT_EQ(parse_error_line("scgame v1 kind=sc n=2 p=1\ntable 0\n1:\n0:\n"), 3);
  EXPECT_EQ(parse_error_line("scgame v1 kind=sc n=2 p=1\ntable 0\n0:\n"), 4);
  EXPECT_EQ(parse_error_line("scgame v1 kind=sc n=1 p=1\ntable 0\n0:\nextra\n"), 4);
}
