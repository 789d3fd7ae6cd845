#pragma once

// "scgame v1" text format.
//
//   scgame v1 kind=<pc|sc|lpce|orlpce|intersectsc> n=<n> p=<p> [r=<r>] [t=<t>]
//   table <index>
//   <x>: <y1> <y2> ...        (n lines, x = 0..n-1, ascending y's)
//   ...
//
// Elements are 0-based; element 0 is the start of every chase. Tables are
// numbered globally: left side funcs[0..p-1], then right side, then (orlpce)
// the next item. Function tables carry exactly one y per line.

#include <string>
#include <string_view>
#include <variant>

#include "chase/game.hpp"

namespace chase {

using GameInstance =
    std::variant<PcInstance, ScInstance, LpceInstance, OrLpceInstance, IntersectScInstance>;

std::string_view game_kind(const GameInstance& game);

std::string write_scgame(const GameInstance& game);

/// Throws ParseError with the offending line number.
GameInstance parse_scgame(std::string_view text);

}  // namespace chase
