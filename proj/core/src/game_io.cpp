#include "chase/game_io.hpp"

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "chase/errors.hpp"

namespace chase {
namespace {

struct Header {
  std::string kind;
  std::size_t n = 0;
  std::size_t p = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> t;
};

void write_header(std::ostringstream& out, std::string_view kind, std::size_t n, std::size_t p,
                  std::optional<std::size_t> r = {}, std::optional<std::size_t> t = {}) {
  out << "scgame v1 kind=" << kind << " n=" << n << " p=" << p;
  if (r) out << " r=" << *r;
  if (t) out << " t=" << *t;
  out << '\n';
}

void write_table(std::ostringstream& out, std::size_t index, const FunctionTable& f) {
  out << "table " << index << '\n';
  for (std::size_t x = 0; x < f.n(); ++x) {
    out << x << ": " << f(static_cast<Index>(x)) << '\n';
  }
}

void write_table(std::ostringstream& out, std::size_t index, const SetFunctionTable& f) {
  out << "table " << index << '\n';
  for (std::size_t x = 0; x < f.n(); ++x) {
    out << x << ':';
    for (Index y : f(static_cast<Index>(x))) {
      out << ' ' << y;
    }
    out << '\n';
  }
}

template <class Table>
void write_tables(std::ostringstream& out, std::size_t& index, std::span<const Table> tables) {
  for (const auto& f : tables) {
    write_table(out, index++, f);
  }
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_number(std::string_view word, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = word.data();
  const auto* last = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (word.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(word) + "'");
  }
  return static_cast<std::size_t>(value);
}

Header parse_header(std::string_view line) {
  const auto words = split_words(line);
  if (words.size() < 2 || words[0] != "scgame" || words[1] != "v1") {
    throw ParseError(1, "expected header 'scgame v1 ...'");
  }
  std::map<std::string_view, std::string_view> fields;
  for (std::size_t i = 2; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(1, "malformed header field '" + std::string(words[i]) + "'");
    }
    if (!fields.emplace(words[i].substr(0, eq), words[i].substr(eq + 1)).second) {
      throw ParseError(1, "duplicate header field '" + std::string(words[i].substr(0, eq)) + "'");
    }
  }
  Header h;
  const auto take = [&](std::string_view key) -> std::optional<std::string_view> {
    auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    auto v = it->second;
    fields.erase(it);
    return v;
  };
  auto kind = take("kind");
  auto n = take("n");
  auto p = take("p");
  if (!kind || !n || !p) {
    throw ParseError(1, "header requires kind=, n= and p=");
  }
  h.kind = std::string(*kind);
  h.n = parse_number(*n, 1, "n");
  h.p = parse_number(*p, 1, "p");
  if (auto r = take("r")) h.r = parse_number(*r, 1, "r");
  if (auto t = take("t")) h.t = parse_number(*t, 1, "t");
  if (!fields.empty()) {
    throw ParseError(1, "unknown header field '" + std::string(fields.begin()->first) + "'");
  }
  if (h.n == 0 || h.p == 0) {
    throw ParseError(1, "n and p must be positive");
  }
  const bool wants_r = h.kind == "lpce" || h.kind == "orlpce";
  const bool wants_t = h.kind == "orlpce";
  if (h.kind != "pc" && h.kind != "sc" && !wants_r && h.kind != "intersectsc") {
    throw ParseError(1, "unknown kind '" + h.kind + "'");
  }
  if (wants_r != h.r.has_value() || wants_t != h.t.has_value()) {
    throw ParseError(1, "kind=" + h.kind + " has the wrong set of r=/t= fields");
  }
  if ((h.r && *h.r == 0) || (h.t && *h.t == 0)) {
    throw ParseError(1, "r and t must be positive");
  }
  return h;
}

class TableReader {
 public:
  TableReader(std::vector<std::string_view> lines, std::size_t n)
      : lines_(std::move(lines)), n_(n) {}

  std::vector<IndexSet> next_table(std::size_t expected_index) {
    const std::size_t header_line = cursor_ + 1;
    const auto words = split_words(take_line());
    if (words.size() != 2 || words[0] != "table") {
      throw ParseError(header_line, "expected 'table " + std::to_string(expected_index) + "'");
    }
    if (parse_number(words[1], header_line, "table index") != expected_index) {
      throw ParseError(header_line, "expected table index " + std::to_string(expected_index));
    }
    std::vector<IndexSet> image(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      const std::size_t line_no = cursor_ + 1;
      const std::string_view line = take_line();
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected '<x>: ...'");
      }
      if (parse_number(line.substr(0, colon), line_no, "row index") != x) {
        throw ParseError(line_no, "expected row " + std::to_string(x));
      }
      for (auto word : split_words(line.substr(colon + 1))) {
        const std::size_t y = parse_number(word, line_no, "element");
        if (y >= n_) {
          throw ParseError(line_no, "element " + std::to_string(y) + " out of range [0, " +
                                        std::to_string(n_) + ")");
        }
        if (!image[x].empty() && image[x].back() >= y) {
          throw ParseError(line_no, "elements must be strictly ascending");
        }
        image[x].push_back(static_cast<Index>(y));
      }
    }
    return image;
  }

  FunctionTable next_function(std::size_t expected_index) {
    const std::size_t first_row = cursor_ + 2;
    auto image = next_table(expected_index);
    std::vector<Index> values(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      if (image[x].size() != 1) {
        throw ParseError(first_row + x, "function table rows carry exactly one value");
      }
      values[x] = image[x].front();
    }
    return FunctionTable(std::move(values));
  }

  void expect_end() const {
    if (cursor_ != lines_.size()) {
      throw ParseError(cursor_ + 1, "trailing content after last table");
    }
  }

 private:
  std::string_view take_line() {
    if (cursor_ >= lines_.size()) {
      throw ParseError(cursor_ + 1, "unexpected end of input");
    }
    return lines_[cursor_++];
  }

  std::vector<std::string_view> lines_;
  std::size_t n_;
  std::size_t cursor_ = 1;  // line 0 is the header
};

PcInstance read_pc(TableReader& in, std::size_t p, std::size_t& index) {
  std::vector<FunctionTable> funcs;
  for (std::size_t i = 0; i < p; ++i) funcs.push_back(in.next_function(index++));
  return PcInstance(std::move(funcs));
}

ScInstance read_sc(TableReader& in, std::size_t p, std::size_t& index) {
  std::vector<SetFunctionTable> funcs;
  for (std::size_t i = 0; i < p; ++i) funcs.emplace_back(in.next_table(index++));
  return ScInstance(std::move(funcs));
}

}  // namespace

std::string_view game_kind(const GameInstance& game) {
  struct {
    std::string_view operator()(const PcInstance&) const { return "pc"; }
    std::string_view operator()(const ScInstance&) const { return "sc"; }
    std::string_view operator()(const LpceInstance&) const { return "lpce"; }
    std::string_view operator()(const OrLpceInstance&) const { return "orlpce"; }
    std::string_view operator()(const IntersectScInstance&) const { return "intersectsc"; }
  } visitor;
  return std::visit(visitor, game);
}

std::string write_scgame(const GameInstance& game) {
  std::ostringstream out;
  std::size_t index = 0;
  if (const auto* pc = std::get_if<PcInstance>(&game)) {
    write_header(out, "pc", pc->n(), pc->p());
    write_tables(out, index, pc->funcs());
  } else if (const auto* sc = std::get_if<ScInstance>(&game)) {
    write_header(out, "sc", sc->n(), sc->p());
    write_tables(out, index, sc->funcs());
  } else if (const auto* lp = std::get_if<LpceInstance>(&game)) {
    write_header(out, "lpce", lp->n(), lp->p(), lp->r);
    write_tables(out, index, lp->left.funcs());
    write_tables(out, index, lp->right.funcs());
  } else if (const auto* orl = std::get_if<OrLpceInstance>(&game)) {
    write_header(out, "orlpce", orl->n(), orl->p(), orl->r(), orl->t());
    for (const auto& item : orl->items()) {
      write_tables(out, index, item.left.funcs());
      write_tables(out, index, item.right.funcs());
    }
  } else {
    const auto& is = std::get<IntersectScInstance>(game);
    write_header(out, "intersectsc", is.n(), is.p());
    write_tables(out, index, is.left.funcs());
    write_tables(out, index, is.right.funcs());
  }
  return out.str();
}

GameInstance parse_scgame(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty input");
  }
  const Header h = parse_header(lines.front());
  TableReader in(std::move(lines), h.n);
  std::size_t index = 0;
  auto finish = [&](GameInstance g) {
    in.expect_end();
    return g;
  };
  try {
    if (h.kind == "pc") return finish(read_pc(in, h.p, index));
    if (h.kind == "sc") return finish(read_sc(in, h.p, index));
    if (h.kind == "lpce") {
      auto left = read_pc(in, h.p, index);
      auto right = read_pc(in, h.p, index);
      return finish(LpceInstance(std::move(left), std::move(right), *h.r));
    }
    if (h.kind == "orlpce") {
      std::vector<LpceInstance> items;
      for (std::size_t j = 0; j < *h.t; ++j) {
        auto left = read_pc(in, h.p, index);
        auto right = read_pc(in, h.p, index);
        items.emplace_back(std::move(left), std::move(right), *h.r);
      }
      return finish(OrLpceInstance(std::move(items)));
    }
    auto left = read_sc(in, h.p, index);
    auto right = read_sc(in, h.p, index);
    return finish(IntersectScInstance(std::move(left), std::move(right)));
  } catch (const DomainError& e) {
    throw ParseError(1, std::string("invalid instance: ") + e.what());
  }
}

}  // namespace chase
