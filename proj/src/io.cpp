#include "gisemi/io.hpp"

#include <cctype>
#include <sstream>

#include "gisemi/error.hpp"

namespace gisemi::io {

  namespace {

    [[noreturn]] void parse_fail(std::string const& what) {
      throw Error(ErrorKind::parse, what);
    }

    std::string_view trim(std::string_view s) {
      auto is_space = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      };
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::vector<std::string> split_ws(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> tokens;
      for (std::string token; in >> token;) {
        tokens.push_back(std::move(token));
      }
      return tokens;
    }

    VertexId lookup_vertex(Graph const& g, std::string_view id) {
      if (auto v = g.find_vertex(id)) {
        return *v;
      }
      parse_fail("unknown vertex id '" + std::string(id) + "'");
    }

    EdgeId lookup_edge(Graph const& g, std::string_view id) {
      if (auto e = g.find_edge(id)) {
        return *e;
      }
      parse_fail("unknown edge id '" + std::string(id) + "'");
    }

  }  // namespace

  bool is_identifier(std::string_view token) noexcept {
    if (token.empty()) {
      return false;
    }
    for (char c : token) {
      if (std::isspace(static_cast<unsigned char>(c)) != 0
          || std::string_view(".@|()#").find(c) != std::string_view::npos) {
        return false;
      }
    }
    return true;
  }

  Graph parse_graph(std::string_view text) {
    Graph              g;
    std::istringstream in{std::string(text)};
    std::size_t        line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto const tokens = split_ws(line);
      if (tokens.empty()) {
        continue;
      }
      auto const where = "line " + std::to_string(line_no) + ": ";
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!is_identifier(tokens[i])) {
          parse_fail(where + "'" + tokens[i] + "' is not a valid id");
        }
      }
      try {
        if (tokens[0] == "vertex" && tokens.size() == 2) {
          g.add_vertex(tokens[1]);
        } else if (tokens[0] == "edge" && tokens.size() == 4) {
          g.add_edge(tokens[1],
                     lookup_vertex(g, tokens[2]),
                     lookup_vertex(g, tokens[3]));
        } else {
          parse_fail(where + "expected 'vertex <id>' or "
                     "'edge <id> <source> <target>'");
        }
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::parse
            && std::string_view(e.what()).starts_with("line ")) {
          throw;
        }
        parse_fail(where + e.what());
      }
    }
    g.check_non_empty();
    return g;
  }

  std::string format_graph(Graph const& g) {
    std::ostringstream out;
    for (VertexId v : g.vertices()) {
      out << "vertex " << g.name(v) << '\n';
    }
    for (EdgeId e : g.edges()) {
      out << "edge " << g.name(e) << ' ' << g.name(g.source(e)) << ' '
          << g.name(g.target(e)) << '\n';
    }
    return out.str();
  }

  Path parse_path(Graph const& g, std::string_view literal) {
    literal = trim(literal);
    if (literal.empty()) {
      parse_fail("empty path literal");
    }
    if (literal.front() == '@') {
      auto const id = literal.substr(1);
      if (!is_identifier(id)) {
        parse_fail("malformed empty-path literal '" + std::string(literal)
                   + "'");
      }
      return Path::empty(lookup_vertex(g, id));
    }
    std::vector<EdgeId> edges;
    std::size_t         start = 0;
    while (true) {
      auto const dot = literal.find('.', start);
      auto const id  = literal.substr(start, dot - start);
      if (!is_identifier(id)) {
        parse_fail("malformed path literal '" + std::string(literal) + "'");
      }
      edges.push_back(lookup_edge(g, id));
      if (dot == std::string_view::npos) {
        break;
      }
      start = dot + 1;
    }
    return Path::from_edges(g, edges);
  }

  Element parse_element(Graph const& g, std::string_view literal) {
    literal = trim(literal);
    if (literal == "0") {
      return Element::zero();
    }
    if (literal.size() < 2 || literal.front() != '('
        || literal.back() != ')') {
      parse_fail("malformed element literal '" + std::string(literal)
                 + "'; expected (v|w) or 0");
    }
    auto const body = literal.substr(1, literal.size() - 2);
    auto const bar  = body.find('|');
    if (bar == std::string_view::npos
        || body.find('|', bar + 1) != std::string_view::npos) {
      parse_fail("element literal '" + std::string(literal)
                 + "' needs exactly one '|'");
    }
    return Element::pair(parse_path(g, body.substr(0, bar)),
                         parse_path(g, body.substr(bar + 1)));
  }

  ClosedInvSub parse_subsemigroup(Graph const& g, std::string_view literal) {
    auto const tokens = split_ws(literal);
    if (tokens.empty()) {
      parse_fail("empty subsemigroup literal");
    }
    auto const& head = tokens[0];
    if (head == "improper" && tokens.size() == 1) {
      return ClosedInvSub::improper();
    }
    if (head == "chain" && tokens.size() == 2) {
      return ClosedInvSub::finite_chain(parse_path(g, tokens[1]));
    }
    if (head == "cycle" && tokens.size() == 3) {
      return ClosedInvSub::cycle(parse_path(g, tokens[1]),
                                 parse_path(g, tokens[2]));
    }
    if (head == "infchain" && tokens.size() == 3) {
      return ClosedInvSub::infinite_chain(parse_path(g, tokens[1]),
                                          parse_path(g, tokens[2]));
    }
    parse_fail("malformed subsemigroup literal '" + std::string(literal)
               + "'; expected chain <path>, cycle <circuit> <path>, "
                 "infchain <circuit> <path> or improper");
  }

  std::string format_path(Graph const& g, Path const& p) {
    if (p.empty()) {
      return "@" + g.name(p.source());
    }
    std::string result;
    for (EdgeId e : p.edges()) {
      if (!result.empty()) {
        result += '.';
      }
      result += g.name(e);
    }
    return result;
  }

  std::string format_element(Graph const& g, Element const& x) {
    if (x.is_zero()) {
      return "0";
    }
    return "(" + format_path(g, x.left()) + "|" + format_path(g, x.right())
           + ")";
  }

  std::string format_subsemigroup(Graph const& g, ClosedInvSub const& L) {
    switch (L.kind()) {
      case SubsemigroupKind::improper:
        return "improper";
      case SubsemigroupKind::finite_chain:
        return "chain " + format_path(g, L.as_finite_chain().path);
      case SubsemigroupKind::infinite_chain: {
        auto const& [c, q] = L.as_infinite_chain();
        return "infchain " + format_path(g, c) + " " + format_path(g, q);
      }
      case SubsemigroupKind::cycle: {
        auto const& [p, d] = L.as_cycle();
        return "cycle " + format_path(g, p) + " " + format_path(g, d);
      }
    }
    return "improper";
  }

}  // namespace gisemi::io
