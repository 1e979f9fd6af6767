#pragma once

// Brute-force engine over a bounded slice of S(G). Everything here works by
// enumeration and saturation; none of it consults the closed-form index
// formulas or the escape-circuit criteria.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gisemi/closed.hpp"
#include "gisemi/element.hpp"
#include "gisemi/graph.hpp"

namespace gisemi::oracle {

  inline constexpr std::size_t default_max_len = 8;

  // Zero plus every non-zero element with components of length at most
  // max_len.
  class BoundedUniverse {
   public:
    BoundedUniverse(Graph g, std::size_t max_len);

    Graph const& graph() const noexcept {
      return _graph;
    }
    std::size_t max_len() const noexcept {
      return _max_len;
    }
    std::vector<Element> const& elements() const noexcept {
      return _elements;
    }
    bool contains(Element const& x) const noexcept {
      return x.height() <= _max_len;
    }

   private:
    Graph                _graph;
    std::size_t          _max_len;
    std::vector<Element> _elements;
  };

  struct Saturation {
    std::set<Element> elements;
    bool              contains_zero = false;
  };

  // Smallest subset of the universe containing gens and closed under
  // products (those that stay in the universe), inverses and up-sets. If 0
  // is ever produced the result is the whole universe, since the up-set of
  // 0 is everything.
  Saturation closure_saturate(BoundedUniverse const&   U,
                              std::span<Element const> gens);

  struct ProfilePoint {
    std::size_t bound;
    std::size_t cosets;
    friend bool operator==(ProfilePoint const&, ProfilePoint const&) = default;
  };

  // For each bound b <= max_len, the number of same-coset classes among
  // {t in U : height(t) <= b, t t^{-1} in L}.
  std::vector<ProfilePoint> index_profile(BoundedUniverse const& U,
                                          ClosedInvSub const&    L);

  // Searches idempotents (s, s) in L and (t, t) in K, |s|, |t| <= max_len,
  // such that for every path p of length <= max_len, (ps, ps) in L iff
  // (pt, pt) in K. This is the defining condition for conjugacy of
  // infinite chains, checked literally.
  std::optional<std::pair<Path, Path>>
  chain_extension_witness(Graph const&        g,
                          ClosedInvSub const& L,
                          ClosedInvSub const& K,
                          std::size_t         max_len);

  // Brute-force search for a conjugating element among all elements with
  // components of length at most search_len, checking containment up to
  // check_len.
  std::optional<Element> search_conjugator(Graph const&        g,
                                           ClosedInvSub const& L,
                                           ClosedInvSub const& K,
                                           std::size_t         search_len,
                                           std::size_t         check_len);

}  // namespace gisemi::oracle
