#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gisemi {

  struct VertexId {
    std::uint32_t value = 0;

    friend auto operator<=>(VertexId, VertexId) = default;
  };

  struct EdgeId {
    std::uint32_t value = 0;

    friend auto operator<=>(EdgeId, EdgeId) = default;
  };

  // Finite directed multigraph. Vertices and edges are numbered in
  // declaration order; that order is the "edge-id order" used wherever
  // output must be deterministic. Parallel edges and loops are allowed.
  class Graph {
   public:
    VertexId add_vertex(std::string name);
    EdgeId   add_edge(std::string name, VertexId source, VertexId target);
    EdgeId   add_edge(std::string name,
                      std::string_view source,
                      std::string_view target);

    std::size_t num_vertices() const noexcept {
      return _vertex_names.size();
    }
    std::size_t num_edges() const noexcept {
      return _edges.size();
    }

    VertexId                vertex(std::string_view name) const;
    EdgeId                  edge(std::string_view name) const;
    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;

    std::string const& name(VertexId v) const;
    std::string const& name(EdgeId e) const;

    VertexId source(EdgeId e) const {
      return _edges[e.value].source;
    }
    VertexId target(EdgeId e) const {
      return _edges[e.value].target;
    }

    // Out-edges of v in edge-id order.
    std::span<EdgeId const> out_edges(VertexId v) const;

    bool contains(VertexId v) const noexcept {
      return v.value < _vertex_names.size();
    }
    bool contains(EdgeId e) const noexcept {
      return e.value < _edges.size();
    }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId>   edges() const;

    // Throws parse-kind Error if the graph has no vertices or no edges.
    void check_non_empty() const;

   private:
    struct EdgeRecord {
      std::string name;
      VertexId    source;
      VertexId    target;
    };

    void check_vertex(VertexId v) const;

    std::vector<std::string>                     _vertex_names;
    std::vector<EdgeRecord>                      _edges;
    std::vector<std::vector<EdgeId>>             _out;
    std::unordered_map<std::string, VertexId>    _vertex_index;
    std::unordered_map<std::string, EdgeId>      _edge_index;
  };

  // Dense edge mask used by the counting and search routines.
  class EdgeMask {
   public:
    EdgeMask() = default;
    explicit EdgeMask(std::size_t num_edges) : _bits(num_edges, false) {}
    EdgeMask(Graph const& g, std::span<EdgeId const> edges);

    void insert(EdgeId e) {
      if (e.value >= _bits.size()) {
        _bits.resize(e.value + 1, false);
      }
      _bits[e.value] = true;
    }
    bool contains(EdgeId e) const noexcept {
      return e.value < _bits.size() && _bits[e.value];
    }

   private:
    std::vector<bool> _bits;
  };

}  // namespace gisemi

template <>
struct std::hash<gisemi::VertexId> {
  std::size_t operator()(gisemi::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

template <>
struct std::hash<gisemi::EdgeId> {
  std::size_t operator()(gisemi::EdgeId e) const noexcept {
    return std::hash<std::uint32_t>{}(e.value);
  }
};
