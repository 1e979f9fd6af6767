#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "gisemi/graph.hpp"
#include "gisemi/path.hpp"

namespace gisemi {

  // An element of the graph inverse semigroup: 0, or a pair (v, w) of paths
  // with a common initial vertex.
  class Element {
   public:
    // Zero.
    Element() = default;

    static Element zero() {
      return Element();
    }
    // Throws vertex_mismatch unless d(left) = d(right).
    static Element pair(Path left, Path right);
    static Element idempotent(Path p) {
      return pair(p, p);
    }

    bool is_zero() const noexcept {
      return !_pair.has_value();
    }
    bool is_idempotent() const noexcept {
      return is_zero() || _pair->first == _pair->second;
    }

    Path const& left() const {
      return _pair.value().first;
    }
    Path const& right() const {
      return _pair.value().second;
    }

    // Longer of the two component lengths (0 for zero).
    std::size_t height() const noexcept;

    friend bool operator==(Element const&, Element const&) = default;
    // Zero first, then by (left, right).
    friend std::strong_ordering operator<=>(Element const& x,
                                            Element const& y);

   private:
    std::optional<std::pair<Path, Path>> _pair;
  };

  // (t,u)(v,w) = (t, pw) if u = pv; (pt, w) if v = pu; 0 otherwise.
  Element multiply(Element const& a, Element const& b);

  inline Element operator*(Element const& a, Element const& b) {
    return multiply(a, b);
  }

  Element inverse(Element const& a);

  // Natural partial order: (t,u) <= (v,w) iff t = pv and u = pw for one p.
  bool natural_leq(Element const& a, Element const& b);

  // {s : s >= a}, from a itself up to the maximal element. Throws
  // infinite_up_set for zero.
  std::vector<Element> up_set(Element const& a);

  // The maximal element above a non-zero a: strip the longest common
  // prefix of the two components. Zero maps to zero.
  Element max_above(Element const& a);

  // Zero followed by every non-zero element whose components have length at
  // most max_len.
  std::vector<Element> enumerate_elements(Graph const& g, std::size_t max_len);

}  // namespace gisemi
