#pragma once

#include <optional>

#include "gisemi/closed.hpp"
#include "gisemi/element.hpp"

namespace gisemi {

  // Conjugacy of proper closed inverse subsemigroups.
  //
  //   finite chains   same root
  //   cycle types     circuits are rotations of one another
  //   infinite chains primitive circuits are rotations of one another
  //
  // Kinds never mix. Throws improper_argument if either side is improper.
  bool are_conjugate(ClosedInvSub const& L, ClosedInvSub const& K);

  // An element (s, t) with (t,s) L (s,t) in K and (s,t) K (t,s) in L, or
  // nullopt when L and K are not conjugate.
  std::optional<Element> conjugator(ClosedInvSub const& L,
                                    ClosedInvSub const& K);

  // Checks (t,s) x (s,t) in K for every x in L and (s,t) y (t,s) in L for
  // every y in K, over elements with components of length at most
  // max_len.
  bool conjugation_contained(ClosedInvSub const& L,
                             ClosedInvSub const& K,
                             Element const&      st,
                             std::size_t         max_len);

}  // namespace gisemi
