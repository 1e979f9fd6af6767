#include "gisemi/fixtures.hpp"

#include <charconv>

#include "gisemi/error.hpp"

namespace gisemi::fixtures {

  Graph chain(std::size_t n) {
    Graph g;
    for (std::size_t i = 0; i <= n; ++i) {
      g.add_vertex("v" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
      g.add_edge("e" + std::to_string(i),
                 VertexId{static_cast<std::uint32_t>(i)},
                 VertexId{static_cast<std::uint32_t>(i - 1)});
    }
    return g;
  }

  Graph loop1() {
    Graph g;
    g.add_vertex("x");
    g.add_edge("a", "x", "x");
    return g;
  }

  Graph loopx() {
    Graph g;
    for (auto const* v : {"x", "y", "z", "x'", "y'"}) {
      g.add_vertex(v);
    }
    g.add_edge("a", "x", "x");
    g.add_edge("e", "x", "y");
    g.add_edge("f", "y", "z");
    g.add_edge("g", "x", "x'");
    g.add_edge("h", "x'", "y'");
    g.add_edge("k", "y", "y'");
    return g;
  }

  Graph loopx_fprime() {
    Graph g = loopx();
    g.add_edge("f'", "z", "x");
    return g;
  }

  Graph bouquet(std::size_t n) {
    if (n == 0 || n > 26) {
      throw Error(ErrorKind::parse, "bouquet size must be between 1 and 26");
    }
    Graph g;
    g.add_vertex("*");
    for (std::size_t i = 0; i < n; ++i) {
      g.add_edge(std::string(1, static_cast<char>('a' + i)), "*", "*");
    }
    return g;
  }

  namespace {
    std::optional<std::size_t> numbered(std::string_view name,
                                        std::string_view stem) {
      if (!name.starts_with(stem) || name.size() == stem.size()) {
        return std::nullopt;
      }
      auto const  digits = name.substr(stem.size());
      std::size_t n      = 0;
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || end != digits.data() + digits.size()) {
        return std::nullopt;
      }
      return n;
    }
  }  // namespace

  std::optional<Graph> by_name(std::string_view name) {
    if (name == "loop1") {
      return loop1();
    }
    if (name == "loopx") {
      return loopx();
    }
    if (name == "loopx_fprime") {
      return loopx_fprime();
    }
    if (auto n = numbered(name, "chain"); n && *n >= 1) {
      return chain(*n);
    }
    if (auto n = numbered(name, "bouquet"); n && *n >= 1 && *n <= 26) {
      return bouquet(*n);
    }
    return std::nullopt;
  }

  std::vector<std::string> names() {
    return {"chain<n>", "loop1", "loopx", "loopx_fprime", "bouquet<n>"};
  }

}  // namespace gisemi::fixtures
