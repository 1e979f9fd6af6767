#include "gisemi/graph.hpp"

#include "gisemi/error.hpp"

namespace gisemi {

  VertexId Graph::add_vertex(std::string name) {
    if (_vertex_index.contains(name)) {
      throw Error(ErrorKind::duplicate_id, "duplicate vertex id " + name);
    }
    VertexId v{static_cast<std::uint32_t>(_vertex_names.size())};
    _vertex_index.emplace(name, v);
    _vertex_names.push_back(std::move(name));
    _out.emplace_back();
    return v;
  }

  EdgeId Graph::add_edge(std::string name, VertexId source, VertexId target) {
    check_vertex(source);
    check_vertex(target);
    if (_edge_index.contains(name)) {
      throw Error(ErrorKind::duplicate_id, "duplicate edge id " + name);
    }
    EdgeId e{static_cast<std::uint32_t>(_edges.size())};
    _edge_index.emplace(name, e);
    _edges.push_back({std::move(name), source, target});
    _out[source.value].push_back(e);
    return e;
  }

  EdgeId Graph::add_edge(std::string      name,
                         std::string_view source,
                         std::string_view target) {
    return add_edge(std::move(name), vertex(source), vertex(target));
  }

  std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = _vertex_index.find(std::string(name));
    if (it == _vertex_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = _edge_index.find(std::string(name));
    if (it == _edge_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  VertexId Graph::vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) {
      return *v;
    }
    throw Error(ErrorKind::unknown_vertex,
                "unknown vertex id " + std::string(name));
  }

  EdgeId Graph::edge(std::string_view name) const {
    if (auto e = find_edge(name)) {
      return *e;
    }
    throw Error(ErrorKind::unknown_edge,
                "unknown edge id " + std::string(name));
  }

  std::string const& Graph::name(VertexId v) const {
    check_vertex(v);
    return _vertex_names[v.value];
  }

  std::string const& Graph::name(EdgeId e) const {
    if (!contains(e)) {
      throw Error(ErrorKind::unknown_edge,
                  "edge index " + std::to_string(e.value) + " out of range");
    }
    return _edges[e.value].name;
  }

  std::span<EdgeId const> Graph::out_edges(VertexId v) const {
    check_vertex(v);
    return _out[v.value];
  }

  std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> result;
    result.reserve(num_vertices());
    for (std::uint32_t i = 0; i < num_vertices(); ++i) {
      result.push_back(VertexId{i});
    }
    return result;
  }

  std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> result;
    result.reserve(num_edges());
    for (std::uint32_t i = 0; i < num_edges(); ++i) {
      result.push_back(EdgeId{i});
    }
    return result;
  }

  void Graph::check_non_empty() const {
    if (_vertex_names.empty()) {
      throw Error(ErrorKind::parse, "graph has no vertices");
    }
    if (_edges.empty()) {
      throw Error(ErrorKind::parse, "graph has no edges");
    }
  }

  void Graph::check_vertex(VertexId v) const {
    if (!contains(v)) {
      throw Error(ErrorKind::unknown_vertex,
                  "vertex index " + std::to_string(v.value) + " out of range");
    }
  }

  EdgeMask::EdgeMask(Graph const& g, std::span<EdgeId const> edges)
      : _bits(g.num_edges(), false) {
    for (EdgeId e : edges) {
      insert(e);
    }
  }

}  // namespace gisemi
