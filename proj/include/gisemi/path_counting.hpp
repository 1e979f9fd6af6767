#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gisemi/count.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/path.hpp"

namespace gisemi {

  // Number of paths (including the empty one) starting at v in g with the
  // removed edges deleted. Infinite iff a directed cycle is reachable from
  // v; otherwise computed by memoised DFS over the reachable acyclic part.
  Count count_paths_from(Graph const&             g,
                         VertexId                 v,
                         std::span<EdgeId const> removed = {});

  // N^{g \ removed}_{v,w}: paths starting at v whose first edge is not an
  // edge of w. The empty path at v always counts.
  Count count_N(Graph const&             g,
                VertexId                 v,
                Path const&              w,
                std::span<EdgeId const> removed = {});

  // All paths starting at v of length at most max_len, in lexicographic
  // edge-id order (prefixes first).
  std::vector<Path> enumerate_paths_from(Graph const& g,
                                         VertexId     v,
                                         std::size_t  max_len);

  // All paths of length at most max_len, grouped by source vertex.
  std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_len);

  // The finite set of paths starting at v that avoid `removed` and whose
  // first edge is not in `first_excluded`, lexicographic edge-id order.
  // Throws infinite_index if that set is infinite.
  std::vector<Path> finite_paths_from(Graph const&   g,
                                      VertexId       v,
                                      EdgeMask const& first_excluded,
                                      EdgeMask const& removed);

  struct EscapeWitness {
    Path     circuit;    // c: non-empty directed circuit
    Path     connector;  // g: from `start` to a vertex of c
    VertexId start;      // v0: a vertex of the anchor path
  };

  // Searches for a circuit c and a connector g from a vertex of `anchor` to
  // a vertex of c, with g sharing no edge with c or the anchor. When
  // `forbidden_loop` is set, c must contain an edge other than that loop.
  // Only vertex-simple circuits and shortest connectors are tried; c may
  // share edges with the anchor.
  std::optional<EscapeWitness>
  find_escape_circuit(Graph const&           g,
                      Path const&            anchor,
                      std::optional<EdgeId> forbidden_loop = std::nullopt);

}  // namespace gisemi
