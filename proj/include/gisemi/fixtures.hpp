#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gisemi/graph.hpp"

namespace gisemi::fixtures {

  // v_n -> v_{n-1} -> ... -> v_0 with edges e_i : v_i -> v_{i-1}. Vertex
  // and edge names are `v<i>` and `e<i>`.
  Graph chain(std::size_t n);

  // One vertex x with a single loop a.
  Graph loop1();

  // x --e--> y --f--> z, a loop a at x, g : x -> x', h : x' -> y',
  // k : y -> y'.
  Graph loopx();

  // loopx with an extra edge f' : z -> x.
  Graph loopx_fprime();

  // One vertex `*` with n loops named a, b, c, ... (n <= 26).
  Graph bouquet(std::size_t n);

  // Resolves chain<n>, loop1, loopx, loopx_fprime and bouquet<n>.
  std::optional<Graph> by_name(std::string_view name);

  std::vector<std::string> names();

}  // namespace gisemi::fixtures
