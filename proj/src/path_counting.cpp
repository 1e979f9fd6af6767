#include "gisemi/path_counting.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "gisemi/error.hpp"

namespace gisemi {

  namespace {

    void check_vertex(Graph const& g, VertexId v) {
      if (!g.contains(v)) {
        throw Error(ErrorKind::unknown_vertex,
                    "vertex index " + std::to_string(v.value)
                        + " is not in the graph");
      }
    }

    // Memoised path counts over the part of g reachable from v, or
    // Infinite as soon as a grey vertex is re-entered.
    Count count_from(Graph const& g, VertexId v, EdgeMask const& removed) {
      enum class Colour : unsigned char { white, grey, black };
      std::vector<Colour> colour(g.num_vertices(), Colour::white);
      std::vector<Count>  memo(g.num_vertices());

      struct Frame {
        VertexId    vertex;
        std::size_t next;
      };
      std::vector<Frame> stack{{v, 0}};
      colour[v.value] = Colour::grey;

      while (!stack.empty()) {
        Frame& top   = stack.back();
        auto   edges = g.out_edges(top.vertex);
        if (top.next < edges.size()) {
          EdgeId e = edges[top.next++];
          if (removed.contains(e)) {
            continue;
          }
          VertexId w = g.target(e);
          if (colour[w.value] == Colour::grey) {
            return Count::infinite();
          }
          if (colour[w.value] == Colour::white) {
            colour[w.value] = Colour::grey;
            stack.push_back({w, 0});
          }
          continue;
        }
        Count total = Count::finite(1);
        for (EdgeId e : edges) {
          if (!removed.contains(e)) {
            total += memo[g.target(e).value];
          }
        }
        memo[top.vertex.value]   = total;
        colour[top.vertex.value] = Colour::black;
        stack.pop_back();
      }
      return memo[v.value];
    }

    std::optional<Path> shortest_circuit_through(Graph const&    g,
                                                 VertexId        u,
                                                 EdgeMask const& excluded) {
      std::vector<std::optional<EdgeId>> parent(g.num_vertices());
      std::vector<bool>                  seen(g.num_vertices(), false);
      std::deque<VertexId>               queue{u};
      seen[u.value] = true;

      auto walk_back = [&](VertexId x) {
        std::vector<EdgeId> edges;
        while (x != u) {
          EdgeId e = *parent[x.value];
          edges.push_back(e);
          x = g.source(e);
        }
        std::reverse(edges.begin(), edges.end());
        return edges;
      };

      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : g.out_edges(x)) {
          if (excluded.contains(e)) {
            continue;
          }
          VertexId y = g.target(e);
          if (y == u) {
            auto edges = walk_back(x);
            edges.push_back(e);
            return Path::from_edges(g, edges);
          }
          if (!seen[y.value]) {
            seen[y.value]   = true;
            parent[y.value] = e;
            queue.push_back(y);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  Count count_paths_from(Graph const&             g,
                         VertexId                 v,
                         std::span<EdgeId const> removed) {
    check_vertex(g, v);
    return count_from(g, v, EdgeMask(g, removed));
  }

  Count count_N(Graph const&             g,
                VertexId                 v,
                Path const&              w,
                std::span<EdgeId const> removed) {
    check_vertex(g, v);
    EdgeMask const mask(g, removed);
    Count          total = Count::finite(1);
    for (EdgeId e : g.out_edges(v)) {
      if (mask.contains(e) || w.contains_edge(e)) {
        continue;
      }
      total += count_from(g, g.target(e), mask);
      if (total.is_infinite()) {
        break;
      }
    }
    return total;
  }

  std::vector<Path> enumerate_paths_from(Graph const& g,
                                         VertexId     v,
                                         std::size_t  max_len) {
    check_vertex(g, v);
    std::vector<Path>                    result;
    std::function<void(Path const&)> visit = [&](Path const& p) {
      result.push_back(p);
      if (p.length() == max_len) {
        return;
      }
      for (EdgeId e : g.out_edges(p.target())) {
        visit(concat(p, Path::edge(g, e)));
      }
    };
    visit(Path::empty(v));
    return result;
  }

  std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_len) {
    std::vector<Path> result;
    for (VertexId v : g.vertices()) {
      auto from_v = enumerate_paths_from(g, v, max_len);
      result.insert(result.end(),
                    std::make_move_iterator(from_v.begin()),
                    std::make_move_iterator(from_v.end()));
    }
    return result;
  }

  std::vector<Path> finite_paths_from(Graph const&    g,
                                      VertexId        v,
                                      EdgeMask const& first_excluded,
                                      EdgeMask const& removed) {
    check_vertex(g, v);
    // In an acyclic region no path is longer than the vertex count.
    std::size_t const                limit = g.num_vertices();
    std::vector<Path>                result;
    std::function<void(Path const&)> visit = [&](Path const& p) {
      if (p.length() > limit) {
        throw Error(ErrorKind::infinite_index,
                    "infinitely many paths leave vertex " + g.name(v));
      }
      result.push_back(p);
      for (EdgeId e : g.out_edges(p.target())) {
        if (removed.contains(e) || (p.empty() && first_excluded.contains(e))) {
          continue;
        }
        visit(concat(p, Path::edge(g, e)));
      }
    };
    visit(Path::empty(v));
    return result;
  }

  std::optional<EscapeWitness>
  find_escape_circuit(Graph const&          g,
                      Path const&           anchor,
                      std::optional<EdgeId> forbidden_loop) {
    EdgeMask const anchor_edges(g, anchor.edges());
    EdgeMask       circuit_excluded(g.num_edges());
    if (forbidden_loop) {
      // The only vertex-simple circuit through a loop is the loop itself.
      circuit_excluded.insert(*forbidden_loop);
    }

    for (VertexId v0 : distinct_vertices(anchor)) {
      // Breadth-first over edges outside the anchor; parents give shortest
      // connectors.
      std::vector<std::optional<EdgeId>> parent(g.num_vertices());
      std::vector<bool>                  seen(g.num_vertices(), false);
      std::vector<VertexId>              order{v0};
      seen[v0.value] = true;
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (EdgeId e : g.out_edges(order[i])) {
          VertexId y = g.target(e);
          if (!anchor_edges.contains(e) && !seen[y.value]) {
            seen[y.value]   = true;
            parent[y.value] = e;
            order.push_back(y);
          }
        }
      }

      for (VertexId u : order) {
        auto circuit = shortest_circuit_through(g, u, circuit_excluded);
        if (!circuit) {
          continue;
        }
        std::vector<EdgeId> connector;
        for (VertexId x = u; x != v0;) {
          EdgeId e = *parent[x.value];
          connector.push_back(e);
          x = g.source(e);
        }
        std::reverse(connector.begin(), connector.end());

        // Cut the connector at the first vertex it shares with the
        // circuit; what remains has no edge in common with the circuit.
        auto const on_circuit = distinct_vertices(*circuit);
        Path       g_path     = Path::empty(v0);
        for (EdgeId e : connector) {
          if (std::find(on_circuit.begin(), on_circuit.end(), g_path.target())
              != on_circuit.end()) {
            break;
          }
          g_path = concat(g_path, Path::edge(g, e));
        }
        return EscapeWitness{*circuit, g_path, v0};
      }
    }
    return std::nullopt;
  }

}  // namespace gisemi
