#include "gisemi/element.hpp"

#include <algorithm>

#include "gisemi/error.hpp"
#include "gisemi/path_counting.hpp"

namespace gisemi {

  Element Element::pair(Path left, Path right) {
    if (left.source() != right.source()) {
      throw Error(ErrorKind::vertex_mismatch,
                  "the two paths of an element must share an initial vertex");
    }
    Element x;
    x._pair.emplace(std::move(left), std::move(right));
    return x;
  }

  std::size_t Element::height() const noexcept {
    if (is_zero()) {
      return 0;
    }
    return std::max(_pair->first.length(), _pair->second.length());
  }

  std::strong_ordering operator<=>(Element const& x, Element const& y) {
    if (x.is_zero() || y.is_zero()) {
      return !x.is_zero() <=> !y.is_zero();
    }
    if (auto c = x.left() <=> y.left(); c != 0) {
      return c;
    }
    return x.right() <=> y.right();
  }

  Element multiply(Element const& a, Element const& b) {
    if (a.is_zero() || b.is_zero()) {
      return Element::zero();
    }
    Path const& t = a.left();
    Path const& u = a.right();
    Path const& v = b.left();
    Path const& w = b.right();
    if (is_suffix(v, u)) {
      // u = p v
      Path p = u.prefix(u.length() - v.length());
      return Element::pair(t, concat(p, w));
    }
    if (is_suffix(u, v)) {
      // v = p u
      Path p = v.prefix(v.length() - u.length());
      return Element::pair(concat(p, t), w);
    }
    return Element::zero();
  }

  Element inverse(Element const& a) {
    if (a.is_zero()) {
      return a;
    }
    return Element::pair(a.right(), a.left());
  }

  bool natural_leq(Element const& a, Element const& b) {
    if (a.is_zero()) {
      return true;
    }
    if (b.is_zero()) {
      return false;
    }
    Path const& t = a.left();
    Path const& u = a.right();
    Path const& v = b.left();
    Path const& w = b.right();
    if (t.length() < v.length() || u.length() < w.length()
        || t.length() - v.length() != u.length() - w.length()) {
      return false;
    }
    std::size_t const k = t.length() - v.length();
    return is_suffix(v, t) && is_suffix(w, u) && t.prefix(k) == u.prefix(k);
  }

  std::vector<Element> up_set(Element const& a) {
    if (a.is_zero()) {
      throw Error(ErrorKind::infinite_up_set,
                  "every element lies above 0; the up-set is all of S(G)");
    }
    auto const n = strip_common_prefix(a.left(), a.right()).prefix.length();
    std::vector<Element> result;
    result.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      result.push_back(
          Element::pair(a.left().drop_front(i), a.right().drop_front(i)));
    }
    return result;
  }

  Element max_above(Element const& a) {
    if (a.is_zero()) {
      return a;
    }
    auto stripped = strip_common_prefix(a.left(), a.right());
    return Element::pair(std::move(stripped.left), std::move(stripped.right));
  }

  std::vector<Element> enumerate_elements(Graph const& g, std::size_t max_len) {
    std::vector<Element> result{Element::zero()};
    for (VertexId v : g.vertices()) {
      auto const paths = enumerate_paths_from(g, v, max_len);
      for (Path const& left : paths) {
        for (Path const& right : paths) {
          result.push_back(Element::pair(left, right));
        }
      }
    }
    return result;
  }

}  // namespace gisemi
