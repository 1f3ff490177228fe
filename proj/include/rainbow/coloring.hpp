#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Which construction rule assigned an edge its color.
enum class Provenance : std::uint8_t { Pendant, RedBlue, Random, Greedy, CycleClass, Given };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Pendant: return "pendant";
    case Provenance::RedBlue: return "red_blue";
    case Provenance::Random: return "random";
    case Provenance::Greedy: return "greedy";
    case Provenance::CycleClass: return "cycle_class";
    case Provenance::Given: return "given";
  }
  return "given";
}

inline Provenance parse_provenance(std::string_view tag) {
  for (auto p : {Provenance::Pendant, Provenance::RedBlue, Provenance::Random, Provenance::Greedy,
                 Provenance::CycleClass, Provenance::Given}) {
    if (to_string(p) == tag) return p;
  }
  throw Error(ErrorCode::Parse, "unknown provenance tag '" + std::string(tag) + "'");
}

/// Total map edge id -> color in [0, palette_size).
struct EdgeColoring {
  std::vector<Color> colors;
  std::vector<Provenance> provenance;
  std::size_t palette_size = 0;

  EdgeColoring() = default;
  EdgeColoring(std::size_t num_edges, std::size_t palette, Provenance tag = Provenance::Given)
      : colors(num_edges, 0), provenance(num_edges, tag), palette_size(palette) {}

  /// Coloring with the given colors; palette is max color + 1 unless larger.
  static EdgeColoring from_colors(std::vector<Color> colors, std::size_t palette = 0) {
    EdgeColoring c;
    for (auto col : colors) palette = std::max<std::size_t>(palette, std::size_t(col) + 1);
    c.provenance.assign(colors.size(), Provenance::Given);
    c.colors = std::move(colors);
    c.palette_size = palette;
    return c;
  }

  std::size_t num_edges() const { return colors.size(); }
  Color operator[](EdgeId e) const { return colors[e]; }

  /// Throws InvalidArgument unless the coloring fits a graph with m edges.
  void check(std::size_t m) const {
    if (colors.size() != m || provenance.size() != m)
      throw Error(ErrorCode::InvalidArgument, "coloring covers " + std::to_string(colors.size()) +
                                                  " edges, graph has " + std::to_string(m));
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] >= palette_size)
        throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(i) + " color " +
                                                    std::to_string(colors[i]) + " outside palette " +
                                                    std::to_string(palette_size));
    }
  }

  /// Number of distinct colors actually used.
  std::size_t colors_used() const {
    std::vector<char> seen(palette_size, 0);
    std::size_t used = 0;
    for (auto c : colors)
      if (!seen[c]) seen[c] = 1, ++used;
    return used;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

// Coloring text format: "m Q", then m lines "edge_id color provenance_tag".

inline void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << c.num_edges() << ' ' << c.palette_size << '\n';
  for (std::size_t i = 0; i < c.num_edges(); ++i)
    out << i << ' ' << c.colors[i] << ' ' << to_string(c.provenance[i]) << '\n';
}

inline EdgeColoring read_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_data_line(in, line, line_no)) throw Error(ErrorCode::Parse, "missing coloring header");
  std::istringstream header(line);
  long long m = -1, q = -1;
  if (!(header >> m >> q) || m < 0 || q < 0) throw Error(ErrorCode::Parse, "expected \"m Q\" header");
  EdgeColoring c(static_cast<std::size_t>(m), static_cast<std::size_t>(q));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_data_line(in, line, line_no))
      throw Error(ErrorCode::Parse, "coloring ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long id = -1, color = -1;
    std::string tag, extra;
    if (!(row >> id >> color >> tag) || id != i || color < 0 || (row >> extra))
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected \"" + std::to_string(i) +
                                        " color tag\"");
    c.colors[static_cast<std::size_t>(i)] = static_cast<Color>(color);
    c.provenance[static_cast<std::size_t>(i)] = parse_provenance(tag);
  }
  c.check(static_cast<std::size_t>(m));
  return c;
}

inline EdgeColoring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_coloring(in);
}

inline void save_coloring(const std::string& path, const EdgeColoring& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  write_coloring(out, c);
}

}  // namespace rainbow
