#pragma once

// Text formats shared by the CLI and the Python module.
//
//   graph         one declaration per line: `vertex <id>` or
//                 `edge <id> <source> <target>`; `#` starts a comment
//   path          `e.f` (edge ids in traversal order) or `@v` (empty path)
//   element       `(v|w)` for path literals v, w, or `0`
//   subsemigroup  `chain <path>`, `cycle <circuit> <path>`,
//                 `infchain <circuit> <path>` or `improper`
//
// Identifiers are runs of characters other than whitespace and `.@|()#`.
// Syntax errors and unknown identifiers throw a parse-kind Error; literals
// that name real edges but violate an algebraic invariant throw the
// corresponding domain error.

#include <string>
#include <string_view>
#include <vector>

#include "gisemi/closed.hpp"
#include "gisemi/element.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/path.hpp"

namespace gisemi::io {

  Graph       parse_graph(std::string_view text);
  std::string format_graph(Graph const& g);

  Path         parse_path(Graph const& g, std::string_view literal);
  Element      parse_element(Graph const& g, std::string_view literal);
  ClosedInvSub parse_subsemigroup(Graph const& g, std::string_view literal);

  std::string format_path(Graph const& g, Path const& p);
  std::string format_element(Graph const& g, Element const& x);
  std::string format_subsemigroup(Graph const& g, ClosedInvSub const& L);

  bool is_identifier(std::string_view token) noexcept;

}  // namespace gisemi::io
