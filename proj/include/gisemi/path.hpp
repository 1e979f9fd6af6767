#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "gisemi/graph.hpp"

namespace gisemi {

  // A directed path: either the empty path at a vertex, or a sequence of
  // edges in traversal order (first-traversed edge leftmost). The vertex
  // sequence is stored alongside the edges, so a Path is self-contained and
  // needs no graph for any of the algebra below.
  class Path {
   public:
    // The empty path at vertex 0.
    Path() : _vertices{VertexId{0}} {}

    static Path empty(VertexId v);
    static Path edge(Graph const& g, EdgeId e);
    // Throws composition_undefined if consecutive edges are not incident.
    static Path from_edges(Graph const& g, std::span<EdgeId const> edges);

    // d(p), the initial vertex.
    VertexId source() const noexcept {
      return _vertices.front();
    }
    // r(p), the terminal vertex.
    VertexId target() const noexcept {
      return _vertices.back();
    }
    std::size_t length() const noexcept {
      return _edges.size();
    }
    bool empty() const noexcept {
      return _edges.empty();
    }
    std::span<EdgeId const> edges() const noexcept {
      return _edges;
    }
    std::span<VertexId const> vertices() const noexcept {
      return _vertices;
    }
    EdgeId first_edge() const {
      return _edges.front();
    }
    EdgeId last_edge() const {
      return _edges.back();
    }

    // First n edges.
    Path prefix(std::size_t n) const;
    // Last n edges.
    Path suffix(std::size_t n) const;
    // Everything after the first n edges.
    Path drop_front(std::size_t n) const {
      return suffix(length() - n);
    }

    bool contains_edge(EdgeId e) const noexcept;

    friend bool operator==(Path const&, Path const&) = default;
    // Source vertex first, then lexicographic edge-id order; a proper
    // prefix sorts before its extensions.
    friend std::strong_ordering operator<=>(Path const& x, Path const& y);

   private:
    Path(std::vector<VertexId> vertices, std::vector<EdgeId> edges)
        : _vertices(std::move(vertices)), _edges(std::move(edges)) {}

    friend Path concat(Path const& p, Path const& q);

    std::vector<VertexId> _vertices;
    std::vector<EdgeId>   _edges;
  };

  // p then q. Throws composition_undefined if r(p) != d(q).
  Path concat(Path const& p, Path const& q);

  // q^k for a circuit q (k = 0 gives the empty path at d(q)).
  Path power(Path const& circuit, std::size_t k);

  // True iff u = p s for some path p. The empty path at r(u) is a suffix
  // of u.
  bool is_suffix(Path const& s, Path const& u);
  bool is_prefix(Path const& p, Path const& u);

  inline bool suffix_comparable(Path const& u, Path const& v) {
    return is_suffix(u, v) || is_suffix(v, u);
  }

  struct CommonPrefix {
    Path prefix;
    Path left;
    Path right;
  };

  // Longest common prefix of u and v together with the remainders.
  // Throws vertex_mismatch unless d(u) = d(v).
  CommonPrefix strip_common_prefix(Path const& u, Path const& v);

  bool is_circuit(Path const& p);

  // p = uv and q = vu for some paths u, v.
  bool paths_conjugate(Path const& p, Path const& q);

  // Rotation of a circuit by k edges: p = uv with |u| = k yields vu.
  Path rotate(Path const& circuit, std::size_t k);

  struct PrimitiveRoot {
    Path        root;
    std::size_t exponent;
  };

  // Shortest r with p = r^exponent. Throws not_a_circuit.
  PrimitiveRoot primitive_root(Path const& p);

  // Suffix of length len of the left-infinite path ...c c c q. Requires c to
  // be a circuit with r(c) = d(q).
  Path periodic_suffix(Path const& circuit, Path const& tail, std::size_t len);

  // The distinct vertices of p in traversal order.
  std::vector<VertexId> distinct_vertices(Path const& p);

}  // namespace gisemi
