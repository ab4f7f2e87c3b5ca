#ifndef SCORONA_GRAPH_IO_HPP
#define SCORONA_GRAPH_IO_HPP

// Plain-text signed graph format:
//
//   # comment
//   n 3
//   e 0 1 +
//   e 1 2 -
//   m +1 -1 -1      (optional explicit marking, one entry per vertex)
//
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scorona/errors.hpp"
#include "scorona/signed_graph.hpp"

namespace scorona {

namespace detail {

inline std::optional<std::size_t> parse_index(const std::string& tok) {
  if (tok.empty() || tok.size() > 18) return std::nullopt;
  std::size_t value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

inline std::optional<Sign> parse_sign_token(const std::string& tok, bool allow_unit) {
  if (tok == "+") return Sign::positive;
  if (tok == "-") return Sign::negative;
  if (allow_unit && tok == "+1") return Sign::positive;
  if (allow_unit && tok == "-1") return Sign::negative;
  return std::nullopt;
}

}  // namespace detail

inline SignedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> order;
  std::optional<Marking> marking;
  std::vector<SignedEdge> edges;
  std::vector<std::vector<bool>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string& kind = tok[0];
    if (kind == "n") {
      if (order) throw ParseError(lineno, "duplicate n line");
      std::optional<std::size_t> count;
      if (tok.size() == 2) count = detail::parse_index(tok[1]);
      if (!count) throw ParseError(lineno, "expected 'n count'");
      order = *count;
      seen.assign(*order, std::vector<bool>(*order, false));
    } else if (kind == "e") {
      std::optional<std::size_t> u, v;
      std::optional<Sign> s;
      if (tok.size() == 4) {
        u = detail::parse_index(tok[1]);
        v = detail::parse_index(tok[2]);
        s = detail::parse_sign_token(tok[3], false);
      }
      if (!u || !v || !s) throw ParseError(lineno, "expected 'e u v sign'");
      if (!order) throw ParseError(lineno, "edge before n line");
      if (*u >= *order || *v >= *order) throw ParseError(lineno, "endpoint out of range");
      if (*u == *v) throw ParseError(lineno, "loop edge");
      if (seen[*u][*v]) throw ParseError(lineno, "duplicate edge");
      seen[*u][*v] = seen[*v][*u] = true;
      edges.push_back({*u, *v, *s});
    } else if (kind == "m") {
      if (marking) throw ParseError(lineno, "duplicate m line");
      if (!order) throw ParseError(lineno, "marking before n line");
      if (tok.size() != *order + 1)
        throw ParseError(lineno, "expected " + std::to_string(*order) + " marking entries");
      Marking mu;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto s = detail::parse_sign_token(tok[i], true);
        if (!s) throw ParseError(lineno, "marking entry must be one of +1 -1 + -");
        mu.push_back(*s);
      }
      marking = std::move(mu);
    } else {
      throw ParseError(lineno, "unknown directive '" + kind + "'");
    }
  }
  if (!order) throw ParseError(lineno + 1, "missing n line");
  return SignedGraph(*order, std::move(edges), std::move(marking));
}

/// Canonical text: the n line, edges in sorted order, then the marking line
/// if the graph carries an explicit marking.
inline std::string write_graph(const SignedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
  if (g.explicit_marking()) {
    out << 'm';
    for (Sign s : *g.explicit_marking()) out << (s == Sign::positive ? " +1" : " -1");
    out << '\n';
  }
  return out.str();
}

inline SignedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline void write_graph_file(const std::string& path, const SignedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << write_graph(g);
  if (!out) throw Error("cannot write " + path);
}

}  // namespace scorona

#endif  // SCORONA_GRAPH_IO_HPP
