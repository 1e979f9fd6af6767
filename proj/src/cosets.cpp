#include "gisemi/cosets.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gisemi/error.hpp"

namespace gisemi {

  namespace {

    void require_coset_rep(ClosedInvSub const& L, Element const& t) {
      if (t.is_zero()) {
        throw Error(ErrorKind::not_a_coset, "0 does not represent a coset");
      }
      if (!membership(L, t * inverse(t))) {
        throw Error(ErrorKind::not_a_coset,
                    "t t^-1 is not in the subsemigroup");
      }
    }

    // Shortlex on total length, then the element order.
    bool shorter(Element const& x, Element const& y) {
      auto key = [](Element const& e) {
        return std::make_tuple(e.left().length() + e.right().length(),
                               e.left().length());
      };
      auto const kx = key(x);
      auto const ky = key(y);
      if (kx != ky) {
        return kx < ky;
      }
      return x < y;
    }

    // Number of distinct edges in p.
    std::size_t distinct_edges(Path const& p) {
      std::set<EdgeId> edges(p.edges().begin(), p.edges().end());
      return edges.size();
    }

  }  // namespace

  bool operator==(Coset const& x, Coset const& y) {
    return x.subsemigroup == y.subsemigroup
           && same_coset(x.subsemigroup, x.representative, y.representative);
  }

  Coset coset_of(ClosedInvSub const& L, Element const& t) {
    require_coset_rep(L, t);
    Element current = max_above(t);
    if (!L.is_proper()) {
      return {L, current};
    }
    while (true) {
      std::size_t const bound = current.height() + description_length(L) + 1;
      Element           best  = current;
      for (Element const& x : members_bounded(L, bound)) {
        Element y = x * current;
        if (y.is_zero()) {
          continue;
        }
        y = max_above(y);
        if (shorter(y, best)) {
          best = std::move(y);
        }
      }
      if (best == current) {
        return {L, current};
      }
      current = std::move(best);
    }
  }

  bool same_coset(ClosedInvSub const& L, Element const& a, Element const& b) {
    require_coset_rep(L, a);
    require_coset_rep(L, b);
    return membership(L, a * inverse(b));
  }

  std::string_view to_string(IndexRule rule) noexcept {
    switch (rule) {
      case IndexRule::finite_formula:
        return "finite-formula";
      case IndexRule::improper:
        return "improper";
      case IndexRule::escape_circuit:
        return "escape-circuit";
      case IndexRule::infinite_chain:
        return "infinite-chain";
      case IndexRule::multi_edge_circuit:
        return "multi-edge-circuit";
    }
    return "unknown";
  }

  IndexReport index_report(Graph const& g, ClosedInvSub const& L) {
    switch (L.kind()) {
      case SubsemigroupKind::improper:
        return {Count::finite(1), IndexRule::improper, std::nullopt};

      case SubsemigroupKind::infinite_chain: {
        auto const& [c, q] = L.as_infinite_chain();
        return {Count::infinite(),
                IndexRule::infinite_chain,
                EscapeWitness{c, q, q.source()}};
      }

      case SubsemigroupKind::finite_chain: {
        Path const& w = L.as_finite_chain().path;
        if (auto witness = find_escape_circuit(g, w)) {
          return {Count::infinite(), IndexRule::escape_circuit, witness};
        }
        Count total = Count::finite(0);
        for (VertexId v : distinct_vertices(w)) {
          total += count_N(g, v, w);
        }
        return {total, IndexRule::finite_formula, std::nullopt};
      }

      case SubsemigroupKind::cycle: {
        auto const& [p, d] = L.as_cycle();
        if (distinct_edges(p) >= 2) {
          return {Count::infinite(),
                  IndexRule::multi_edge_circuit,
                  EscapeWitness{p, d, d.source()}};
        }
        // p = a^m for a loop a.
        EdgeId const      a = p.first_edge();
        std::size_t const m = p.length();
        if (auto witness = find_escape_circuit(g, d, a)) {
          return {Count::infinite(), IndexRule::escape_circuit, witness};
        }
        EdgeId const removed[] = {a};
        Count        total
            = (m - 1) * count_N(g, g.source(a), Path::edge(g, a));
        for (VertexId v : distinct_vertices(d)) {
          total += count_N(g, v, d, removed);
        }
        return {total, IndexRule::finite_formula, std::nullopt};
      }
    }
    throw Error(ErrorKind::invalid_subsemigroup, "unknown subsemigroup kind");
  }

  std::vector<Element> coset_representatives(Graph const&        g,
                                             ClosedInvSub const& L) {
    IndexReport const report = index_report(g, L);
    if (report.index.is_infinite()) {
      throw Error(ErrorKind::infinite_index,
                  "infinitely many cosets cannot be listed");
    }
    std::vector<Element> result;
    switch (L.kind()) {
      case SubsemigroupKind::improper:
        result.push_back(Element::idempotent(Path::empty(VertexId{0})));
        break;

      case SubsemigroupKind::finite_chain: {
        Path const& w = L.as_finite_chain().path;
        if (distinct_vertices(w).size() != w.length() + 1) {
          throw Error(ErrorKind::invalid_subsemigroup,
                      "finite index but the chain path revisits a vertex");
        }
        EdgeMask const on_w(g, w.edges());
        EdgeMask const none(g.num_edges());
        for (std::size_t i = w.length() + 1; i-- > 0;) {
          Path const s = w.suffix(i);
          for (Path& t : finite_paths_from(g, s.source(), on_w, none)) {
            result.push_back(Element::pair(s, std::move(t)));
          }
        }
        break;
      }

      case SubsemigroupKind::cycle: {
        auto const& [p, d] = L.as_cycle();
        EdgeId const   a   = p.first_edge();
        EdgeId const   loop[] = {a};
        EdgeMask const on_d(g, d.edges());
        EdgeMask const only_a(g, loop);
        EdgeMask const none(g.num_edges());
        for (std::size_t i = d.length() + 1; i-- > 0;) {
          Path const s = d.suffix(i);
          for (Path& t : finite_paths_from(g, s.source(), on_d, only_a)) {
            result.push_back(Element::pair(s, std::move(t)));
          }
        }
        auto const leaving = finite_paths_from(g, g.source(a), only_a, none);
        Path const a_path  = Path::edge(g, a);
        for (std::size_t j = 1; j < p.length(); ++j) {
          Path const prefix = power(a_path, j);
          for (Path const& t : leaving) {
            result.push_back(Element::pair(d, concat(prefix, t)));
          }
        }
        break;
      }

      case SubsemigroupKind::infinite_chain:
        break;
    }
    return result;
  }

  std::vector<Element> coset_elements_bounded(ClosedInvSub const& L,
                                              Element const&      t,
                                              std::size_t         max_len,
                                              Graph const*        g) {
    require_coset_rep(L, t);
    if (!L.is_proper()) {
      if (g == nullptr) {
        throw Error(ErrorKind::improper_argument,
                    "the improper coset is all of S(G); a graph is needed");
      }
      return enumerate_elements(*g, max_len);
    }
    std::set<Element> found;
    for (Element const& x : members_bounded(L, max_len + t.height())) {
      Element const y = x * t;
      if (y.is_zero()) {
        continue;
      }
      for (Element& s : up_set(y)) {
        if (s.height() <= max_len) {
          found.insert(std::move(s));
        }
      }
    }
    return {found.begin(), found.end()};
  }

}  // namespace gisemi
