#ifndef SPINED_IO_HPP
#define SPINED_IO_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "spined/chordal.hpp"
#include "spined/error.hpp"
#include "spined/graph.hpp"
#include "spined/hypergraph.hpp"
#include "spined/induced.hpp"

namespace spined {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a comment.
  std::optional<std::string> next_content(std::string_view comment) {
    std::string line;
    while (raw(line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || comment.find(line[first]) != std::string_view::npos) continue;
      return line;
    }
    return std::nullopt;
  }

  // Next line that is not a comment; blank lines are returned as they are.
  std::optional<std::string> next_line(char comment) {
    std::string line;
    while (raw(line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] == comment) continue;
      return line;
    }
    return std::nullopt;
  }

  std::size_t line_number() const noexcept { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, "line " + std::to_string(line_) + ": " + what);
  }

 private:
  bool raw(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_;
    return true;
  }

  std::istream& in_;
  std::size_t line_ = 0;
};

inline std::vector<std::size_t> read_numbers(const LineReader& reader, const std::string& line,
                                             std::size_t skip_tokens = 0) {
  std::istringstream ss(line);
  std::string token;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; ss >> token; ++i) {
    if (i < skip_tokens) continue;
    if (token.front() == '#') break;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(token, &pos);
    } catch (const std::exception&) {
      reader.fail("expected a number, got '" + token + "'");
    }
    if (pos != token.size() || token.front() == '-') reader.fail("expected a number, got '" + token + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace detail

/// Edge list: `n m`, then m lines `u v` (0-based). `#` starts a comment.
/// A PACE `.gr` file (`p tw n m`, 1-based, `c` comments) is accepted too.
inline Graph read_graph(std::istream& in) {
  detail::LineReader reader(in);
  auto header = reader.next_content("#c");
  if (!header) reader.fail("missing header");
  const bool pace = header->rfind("p", 0) == 0;
  const auto counts = detail::read_numbers(reader, *header, pace ? 2 : 0);
  if (counts.size() != 2) reader.fail("header must be `n m`");
  if (counts[0] > Graph::kMaxVertices) throw Error(Errc::cap_exceeded, "graphs are limited to 64 vertices");
  Graph g(counts[0]);
  const std::size_t offset = pace ? 1 : 0;
  for (std::size_t i = 0; i < counts[1]; ++i) {
    auto line = reader.next_content(pace ? "c" : "#");
    if (!line) reader.fail("expected " + std::to_string(counts[1]) + " edges, found " + std::to_string(i));
    const auto uv = detail::read_numbers(reader, *line);
    if (uv.size() != 2) reader.fail("edge line must hold two vertices");
    if (uv[0] < offset || uv[1] < offset || uv[0] - offset >= g.order() || uv[1] - offset >= g.order()) {
      reader.fail("edge endpoint out of range");
    }
    if (uv[0] == uv[1]) reader.fail("loops are not allowed");
    g.add_edge(uv[0] - offset, uv[1] - offset);
  }
  if (reader.next_content(pace ? "c" : "#")) reader.fail("trailing content after the edge list");
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// `n m`, then exactly m lines, each one hyperedge (an empty line is ∅).
inline Hypergraph read_hypergraph(std::istream& in) {
  detail::LineReader reader(in);
  auto header = reader.next_content("#");
  if (!header) reader.fail("missing header");
  const auto counts = detail::read_numbers(reader, *header);
  if (counts.size() != 2) reader.fail("header must be `n m`");
  if (counts[0] > Graph::kMaxVertices) throw Error(Errc::cap_exceeded, "hypergraphs are limited to 64 vertices");
  Hypergraph h(counts[0]);
  for (std::size_t i = 0; i < counts[1]; ++i) {
    auto line = reader.next_line('#');
    if (!line) reader.fail("expected " + std::to_string(counts[1]) + " hyperedges, found " + std::to_string(i));
    const auto edge = detail::read_numbers(reader, *line);
    for (std::size_t v : edge) {
      if (v >= h.order()) reader.fail("hyperedge vertex out of range");
    }
    h.add_edge(edge);
  }
  if (reader.next_content("#")) reader.fail("trailing content after the hyperedges");
  return h;
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.order() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

/// PACE 2017 `.td`: `s td <bags> <width+1> <n>`, `b <id> <vertices>`, then
/// tree edges. Bag ids and vertices are 1-based.
inline void write_td(std::ostream& out, const TreeDecomposition& td) {
  const auto w = td.width();
  out << "s td " << td.bags.size() << ' ' << (w ? *w + 1 : 0) << ' ' << td.vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (std::size_t v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.tree) out << a + 1 << ' ' << b + 1 << '\n';
}

inline std::string format_td(const TreeDecomposition& td) {
  std::ostringstream out;
  write_td(out, td);
  return out.str();
}

inline TreeDecomposition read_td(std::istream& in) {
  detail::LineReader reader(in);
  auto header = reader.next_content("c");
  if (!header || header->rfind("s td", 0) != 0) reader.fail("missing `s td` header");
  const auto counts = detail::read_numbers(reader, *header, 2);
  if (counts.size() != 3) reader.fail("header must be `s td <bags> <width+1> <n>`");
  TreeDecomposition td;
  td.vertex_count = counts[2];
  td.bags.resize(counts[0]);
  std::vector<bool> seen(counts[0], false);
  for (std::size_t i = 0; i < counts[0]; ++i) {
    auto line = reader.next_content("c");
    if (!line || line->rfind("b", 0) != 0) reader.fail("expected a bag line");
    const auto nums = detail::read_numbers(reader, *line, 1);
    if (nums.empty() || nums[0] == 0 || nums[0] > counts[0]) reader.fail("bag id out of range");
    if (seen[nums[0] - 1]) reader.fail("bag " + std::to_string(nums[0]) + " listed twice");
    seen[nums[0] - 1] = true;
    Bag bag;
    for (std::size_t k = 1; k < nums.size(); ++k) {
      if (nums[k] == 0) reader.fail("vertices are numbered from 1");
      bag.push_back(nums[k] - 1);
    }
    std::sort(bag.begin(), bag.end());
    td.bags[nums[0] - 1] = std::move(bag);
  }
  while (auto line = reader.next_content("c")) {
    const auto ab = detail::read_numbers(reader, *line);
    if (ab.size() != 2 || ab[0] == 0 || ab[1] == 0 || ab[0] > counts[0] || ab[1] > counts[0]) {
      reader.fail("tree edge must join two bag ids");
    }
    td.tree.emplace_back(ab[0] - 1, ab[1] - 1);
  }
  const auto w = td.width();
  if ((w ? *w + 1 : 0) != counts[1]) reader.fail("declared bag size does not match the largest bag");
  return td;
}

inline TreeDecomposition parse_td(const std::string& text) {
  std::istringstream in(text);
  return read_td(in);
}

/// The PACE layout as json, with the same 1-based numbering.
inline nlohmann::json td_to_json(const TreeDecomposition& td) {
  const auto w = td.width();
  nlohmann::json bags = nlohmann::json::array();
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    nlohmann::json vs = nlohmann::json::array();
    for (std::size_t v : td.bags[i]) vs.push_back(v + 1);
    bags.push_back({{"id", i + 1}, {"vertices", vs}});
  }
  nlohmann::json tree = nlohmann::json::array();
  for (auto [a, b] : td.tree) tree.push_back({a + 1, b + 1});
  return {{"bag_count", td.bags.size()},
          {"max_bag_size", w ? *w + 1 : 0},
          {"vertex_count", td.vertex_count},
          {"bags", bags},
          {"tree", tree}};
}

inline void write_labeling(std::ostream& out, const Labeling& lab) {
  for (std::size_t v = 0; v < lab.labels.size(); ++v) out << v << ' ' << lab.labels[v] << '\n';
}

}  // namespace spined

#endif  // SPINED_IO_HPP
