#include "gisemi/path.hpp"

#include <algorithm>
#include <string>

#include "gisemi/error.hpp"

namespace gisemi {

  Path Path::empty(VertexId v) {
    Path p;
    p._vertices = {v};
    return p;
  }

  Path Path::edge(Graph const& g, EdgeId e) {
    Path p;
    p._vertices = {g.source(e), g.target(e)};
    p._edges    = {e};
    return p;
  }

  Path Path::from_edges(Graph const& g, std::span<EdgeId const> edges) {
    if (edges.empty()) {
      throw Error(ErrorKind::composition_undefined,
                  "an empty edge list does not determine a base vertex");
    }
    Path p;
    p._vertices.clear();
    p._vertices.reserve(edges.size() + 1);
    p._edges.assign(edges.begin(), edges.end());
    for (EdgeId e : edges) {
      if (!g.contains(e)) {
        throw Error(ErrorKind::unknown_edge,
                    "edge index " + std::to_string(e.value) + " out of range");
      }
    }
    p._vertices.push_back(g.source(edges.front()));
    for (EdgeId e : edges) {
      if (g.source(e) != p._vertices.back()) {
        throw Error(ErrorKind::composition_undefined,
                    "edge " + g.name(e) + " does not start where "
                        + g.name(p._vertices.back()) + " ends the path");
      }
      p._vertices.push_back(g.target(e));
    }
    return p;
  }

  Path Path::prefix(std::size_t n) const {
    Path p;
    p._vertices.assign(_vertices.begin(), _vertices.begin() + n + 1);
    p._edges.assign(_edges.begin(), _edges.begin() + n);
    return p;
  }

  Path Path::suffix(std::size_t n) const {
    std::size_t const start = length() - n;
    Path              p;
    p._vertices.assign(_vertices.begin() + start, _vertices.end());
    p._edges.assign(_edges.begin() + start, _edges.end());
    return p;
  }

  bool Path::contains_edge(EdgeId e) const noexcept {
    return std::find(_edges.begin(), _edges.end(), e) != _edges.end();
  }

  std::strong_ordering operator<=>(Path const& x, Path const& y) {
    if (auto c = x.source() <=> y.source(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        x._edges.begin(), x._edges.end(), y._edges.begin(), y._edges.end());
  }

  Path concat(Path const& p, Path const& q) {
    if (p.target() != q.source()) {
      throw Error(ErrorKind::composition_undefined,
                  "path ends at vertex " + std::to_string(p.target().value)
                      + " but the next starts at "
                      + std::to_string(q.source().value));
    }
    if (q.empty()) {
      return p;
    }
    if (p.empty()) {
      return q;
    }
    std::vector<VertexId> vertices;
    vertices.reserve(p.length() + q.length() + 1);
    vertices.assign(p._vertices.begin(), p._vertices.end());
    vertices.insert(vertices.end(), q._vertices.begin() + 1, q._vertices.end());
    std::vector<EdgeId> edges;
    edges.reserve(p.length() + q.length());
    edges.assign(p._edges.begin(), p._edges.end());
    edges.insert(edges.end(), q._edges.begin(), q._edges.end());
    return Path(std::move(vertices), std::move(edges));
  }

  Path power(Path const& circuit, std::size_t k) {
    if (!circuit.empty() && !is_circuit(circuit)) {
      throw Error(ErrorKind::not_a_circuit, "only circuits have powers");
    }
    Path result = Path::empty(circuit.source());
    for (std::size_t i = 0; i < k; ++i) {
      result = concat(result, circuit);
    }
    return result;
  }

  bool is_suffix(Path const& s, Path const& u) {
    if (s.length() > u.length()) {
      return false;
    }
    if (s.empty()) {
      return s.source() == u.target();
    }
    return std::equal(s.edges().begin(),
                      s.edges().end(),
                      u.edges().end() - s.length());
  }

  bool is_prefix(Path const& p, Path const& u) {
    if (p.length() > u.length() || p.source() != u.source()) {
      return false;
    }
    return std::equal(p.edges().begin(), p.edges().end(), u.edges().begin());
  }

  CommonPrefix strip_common_prefix(Path const& u, Path const& v) {
    if (u.source() != v.source()) {
      throw Error(ErrorKind::vertex_mismatch,
                  "paths do not share an initial vertex");
    }
    auto const [iu, iv] = std::mismatch(
        u.edges().begin(), u.edges().end(), v.edges().begin(), v.edges().end());
    std::size_t const n = static_cast<std::size_t>(iu - u.edges().begin());
    return {u.prefix(n), u.drop_front(n), v.drop_front(n)};
  }

  bool is_circuit(Path const& p) {
    return !p.empty() && p.source() == p.target();
  }

  Path rotate(Path const& circuit, std::size_t k) {
    if (k == 0 || k == circuit.length()) {
      return circuit;
    }
    return concat(circuit.drop_front(k), circuit.prefix(k));
  }

  bool paths_conjugate(Path const& p, Path const& q) {
    if (p == q) {
      return p.empty() || is_circuit(p);
    }
    if (p.length() != q.length() || !is_circuit(p) || !is_circuit(q)) {
      return false;
    }
    for (std::size_t k = 1; k < p.length(); ++k) {
      if (rotate(p, k) == q) {
        return true;
      }
    }
    return false;
  }

  PrimitiveRoot primitive_root(Path const& p) {
    if (!is_circuit(p)) {
      throw Error(ErrorKind::not_a_circuit,
                  "primitive roots are defined for circuits only");
    }
    auto const        edges = p.edges();
    std::size_t const n     = edges.size();
    for (std::size_t period = 1; period < n; ++period) {
      if (n % period != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = period; i < n && periodic; ++i) {
        periodic = edges[i] == edges[i - period];
      }
      if (periodic) {
        return {p.prefix(period), n / period};
      }
    }
    return {p, 1};
  }

  Path periodic_suffix(Path const& circuit, Path const& tail, std::size_t len) {
    if (len <= tail.length()) {
      return tail.suffix(len);
    }
    std::size_t const extra  = len - tail.length();
    std::size_t const copies = (extra + circuit.length() - 1) / circuit.length();
    return concat(power(circuit, copies), tail).suffix(len);
  }

  std::vector<VertexId> distinct_vertices(Path const& p) {
    std::vector<VertexId> result;
    for (VertexId v : p.vertices()) {
      if (std::find(result.begin(), result.end(), v) == result.end()) {
        result.push_back(v);
      }
    }
    return result;
  }

}  // namespace gisemi
