#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gisemi/closed.hpp"
#include "gisemi/count.hpp"
#include "gisemi/element.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/path_counting.hpp"

namespace gisemi {

  // A right coset of L: the up-closure of L t for a non-zero t with
  // t t^{-1} in L. Two cosets compare equal iff they are the same set.
  struct Coset {
    ClosedInvSub subsemigroup;
    Element      representative;

    friend bool operator==(Coset const& x, Coset const& y);
  };

  // Builds the coset of t, with a canonical representative: repeatedly
  // replace t by the smallest (shortlex) maximal element of x t over a
  // bounded probe set of x in L. Throws not_a_coset if t is zero or
  // t t^{-1} is not in L.
  Coset coset_of(ClosedInvSub const& L, Element const& t);

  // a, b lie in the same coset iff a b^{-1} in L. Throws not_a_coset if
  // either is not a coset representative.
  bool same_coset(ClosedInvSub const& L, Element const& a, Element const& b);

  enum class IndexRule {
    finite_formula,       // closed-form count
    improper,             // whole semigroup: one coset
    escape_circuit,       // circuit reachable from the anchor path
    infinite_chain,       // infinite chains always have infinite index
    multi_edge_circuit    // cycle type whose circuit has two distinct edges
  };

  std::string_view to_string(IndexRule rule) noexcept;

  struct IndexReport {
    Count                        index;
    IndexRule                    rule;
    // For infinite index: a circuit c, a path g and a vertex v0 that
    // produce infinitely many distinct cosets.
    std::optional<EscapeWitness> witness;
  };

  IndexReport index_report(Graph const& g, ClosedInvSub const& L);

  inline Count index(Graph const& g, ClosedInvSub const& L) {
    return index_report(g, L).index;
  }

  // One representative per coset, pairwise distinct under same_coset.
  // Throws infinite_index if the index is infinite.
  std::vector<Element> coset_representatives(Graph const&        g,
                                             ClosedInvSub const& L);

  // Elements s with components of length at most max_len and s >= x t for
  // some x in L with components of length at most max_len + height(t).
  // The graph is needed only for the improper subsemigroup.
  std::vector<Element> coset_elements_bounded(ClosedInvSub const& L,
                                              Element const&      t,
                                              std::size_t         max_len,
                                              Graph const*        g = nullptr);

}  // namespace gisemi
