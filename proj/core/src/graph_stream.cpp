#include "chase/graph_stream.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chase/errors.hpp"

namespace chase {
namespace {

std::vector<std::string_view> words_of(std::string_view line) {
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

std::uint64_t number(std::string_view word, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (word.empty() || ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

std::uint64_t field(std::string_view word, std::string_view key) {
  if (word.substr(0, key.size()) != key) {
    throw ParseError(1, "expected field '" + std::string(key) + "', got '" + std::string(word) + "'");
  }
  return number(word.substr(key.size()), 1);
}

}  // namespace

void validate(const GraphStream& g) {
  const auto in_range = [&](Vertex x) { return x < g.num_vertices; };
  if (!in_range(g.source) || !in_range(g.target)) {
    throw DomainError("GraphStream: source/target out of range");
  }
  for (const Edge& e : g.edges) {
    if (!in_range(e.u) || !in_range(e.v)) {
      throw DomainError("GraphStream: edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw DomainError("GraphStream: self-loop at vertex " + std::to_string(e.u));
    }
  }
}

GraphStream reversed(const GraphStream& g) {
  GraphStream out = g;
  std::reverse(out.edges.begin(), out.edges.end());
  return out;
}

std::string serialize_stream(const GraphStream& g) {
  std::ostringstream out;
  out << "graphstream v1 " << (g.directed ? "directed" : "undirected") << " nv=" << g.num_vertices
      << " ne=" << g.edges.size() << " src=" << g.source << " dst=" << g.target
      << " p=" << g.passes_hint << '\n';
  for (const Edge& e : g.edges) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

GraphStream parse_stream(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) {
    throw ParseError(1, "empty input");
  }
  const auto head = words_of(lines[0]);
  if (head.size() != 8 || head[0] != "graphstream" || head[1] != "v1") {
    throw ParseError(1, "expected 'graphstream v1 <directed|undirected> nv= ne= src= dst= p='");
  }
  GraphStream g;
  if (head[2] == "directed") {
    g.directed = true;
  } else if (head[2] != "undirected") {
    throw ParseError(1, "expected 'directed' or 'undirected'");
  }
  g.num_vertices = field(head[3], "nv=");
  const std::uint64_t ne = field(head[4], "ne=");
  const std::uint64_t src = field(head[5], "src=");
  const std::uint64_t dst = field(head[6], "dst=");
  g.passes_hint = field(head[7], "p=");
  if (src >= g.num_vertices || dst >= g.num_vertices) {
    throw ParseError(1, "src/dst out of range");
  }
  g.source = static_cast<Vertex>(src);
  g.target = static_cast<Vertex>(dst);
  if (lines.size() - 1 < ne) {
    throw ParseError(lines.size() + 1, "unexpected end of input: header declares " +
                                           std::to_string(ne) + " edges");
  }
  if (lines.size() - 1 > ne) {
    throw ParseError(ne + 2, "more edges than the " + std::to_string(ne) + " declared");
  }
  g.edges.reserve(ne);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto w = words_of(lines[i]);
    if (w.size() != 2) {
      throw ParseError(i + 1, "expected '<u> <v>'");
    }
    const std::uint64_t u = number(w[0], i + 1);
    const std::uint64_t v = number(w[1], i + 1);
    if (u >= g.num_vertices || v >= g.num_vertices) {
      throw ParseError(i + 1, "vertex id out of range");
    }
    if (u == v) {
      throw ParseError(i + 1, "self-loop");
    }
    g.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return g;
}

}  // namespace chase
