#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gisemi/element.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/path.hpp"

namespace gisemi {

  enum class SubsemigroupKind { finite_chain, infinite_chain, cycle, improper };

  std::string_view to_string(SubsemigroupKind kind) noexcept;

  // A closed inverse subsemigroup of S(G), in one of four finite forms:
  //
  //   finite chain   (w)     all (q, q) with q a suffix of w
  //   infinite chain (c, q)  all (s, s) with s a suffix of c^k q, some k
  //   cycle          (p, d)  L_{p,d}: (v p^r d, v p^s d) for v a suffix of p
  //                          and r, s >= 0, together with (q, q) for q a
  //                          suffix of d
  //   improper               the whole of S(G)
  //
  // Infinite chains are kept canonical (c primitive and the tail q as short
  // as possible), and a cycle's (p, d) never share a first edge, so
  // structural equality is set equality.
  class ClosedInvSub {
   public:
    struct FiniteChain {
      Path path;
      friend bool operator==(FiniteChain const&, FiniteChain const&) = default;
    };
    struct InfiniteChain {
      Path circuit;
      Path tail;
      friend bool operator==(InfiniteChain const&,
                             InfiniteChain const&) = default;
    };
    struct Cycle {
      Path circuit;
      Path tail;
      friend bool operator==(Cycle const&, Cycle const&) = default;
    };
    struct Improper {
      friend bool operator==(Improper const&, Improper const&) = default;
    };

    static ClosedInvSub finite_chain(Path w);
    // Canonicalises (c, q). Throws invalid_subsemigroup if c is not a
    // circuit or d(q) != d(c).
    static ClosedInvSub infinite_chain(Path circuit, Path tail);
    // Throws invalid_subsemigroup if p is not a non-empty circuit, if
    // d(d) != d(p), or if p and d share a first edge.
    static ClosedInvSub cycle(Path circuit, Path tail);
    static ClosedInvSub improper() {
      return ClosedInvSub(Improper{});
    }

    // Generic constructor keyed by kind: one path for finite chains, two
    // (circuit, tail) for the other proper kinds, none for improper.
    static ClosedInvSub make(SubsemigroupKind kind, std::span<Path const> paths);

    SubsemigroupKind kind() const noexcept;

    bool is_proper() const noexcept {
      return kind() != SubsemigroupKind::improper;
    }

    // Throws wrong_type on a kind mismatch.
    FiniteChain const&   as_finite_chain() const;
    InfiniteChain const& as_infinite_chain() const;
    Cycle const&         as_cycle() const;

    friend bool operator==(ClosedInvSub const&, ClosedInvSub const&) = default;

   private:
    using Repr = std::variant<FiniteChain, InfiniteChain, Cycle, Improper>;

    explicit ClosedInvSub(Repr r) : _repr(std::move(r)) {}

    Repr _repr;
  };

  inline SubsemigroupKind classify(ClosedInvSub const& L) noexcept {
    return L.kind();
  }

  bool membership(ClosedInvSub const& L, Element const& x);

  // Smallest closed inverse subsemigroup containing gens. Throws
  // invalid_subsemigroup on an empty generator list.
  ClosedInvSub generated(std::span<Element const> gens);

  // Initial vertex of a finite chain's path. Throws wrong_type otherwise.
  VertexId root(ClosedInvSub const& L);

  // (w, w) for a finite chain (w). Throws wrong_type otherwise.
  Element min_idempotent(ClosedInvSub const& L);

  // True iff L consists of idempotents only.
  bool is_idempotent_only(ClosedInvSub const& L) noexcept;

  // Elements of L whose components have length at most max_len, sorted.
  // The improper subsemigroup needs the graph to enumerate; passing nullptr
  // for it throws improper_argument.
  std::vector<Element> members_bounded(ClosedInvSub const& L,
                                       std::size_t         max_len,
                                       Graph const*        g = nullptr);

  // Length of the longest path a finite description of L mentions, plus
  // the circuit length for periodic kinds. Used to size probe sets.
  std::size_t description_length(ClosedInvSub const& L) noexcept;

}  // namespace gisemi
