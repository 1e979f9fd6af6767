#include "gisemi/conjugacy.hpp"

#include "gisemi/error.hpp"

namespace gisemi {

  namespace {

    void require_proper(ClosedInvSub const& L, ClosedInvSub const& K) {
      if (!L.is_proper() || !K.is_proper()) {
        throw Error(ErrorKind::improper_argument,
                    "conjugacy is defined for proper subsemigroups only");
      }
    }

    // k with rotate(p, k) == q, if any.
    std::optional<std::size_t> rotation_offset(Path const& p, Path const& q) {
      if (p == q) {
        return 0;
      }
      if (p.length() != q.length() || !is_circuit(p) || !is_circuit(q)) {
        return std::nullopt;
      }
      for (std::size_t k = 1; k < p.length(); ++k) {
        if (rotate(p, k) == q) {
          return k;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  bool are_conjugate(ClosedInvSub const& L, ClosedInvSub const& K) {
    require_proper(L, K);
    if (L.kind() != K.kind()) {
      return false;
    }
    switch (L.kind()) {
      case SubsemigroupKind::finite_chain:
        return root(L) == root(K);
      case SubsemigroupKind::cycle:
        return paths_conjugate(L.as_cycle().circuit, K.as_cycle().circuit);
      case SubsemigroupKind::infinite_chain:
        // Canonical circuits are already primitive.
        return paths_conjugate(L.as_infinite_chain().circuit,
                               K.as_infinite_chain().circuit);
      case SubsemigroupKind::improper:
        break;
    }
    return false;
  }

  std::optional<Element> conjugator(ClosedInvSub const& L,
                                    ClosedInvSub const& K) {
    if (!are_conjugate(L, K)) {
      return std::nullopt;
    }
    switch (L.kind()) {
      case SubsemigroupKind::finite_chain:
        return Element::pair(L.as_finite_chain().path,
                             K.as_finite_chain().path);
      case SubsemigroupKind::cycle: {
        // p = uv and q = vu: s = v d, t = k.
        auto const& [p, d] = L.as_cycle();
        auto const& [q, k] = K.as_cycle();
        std::size_t const offset = *rotation_offset(p, q);
        return Element::pair(concat(p.drop_front(offset), d), k);
      }
      case SubsemigroupKind::infinite_chain: {
        // c1 = uv and c2 = vu: the words left of q1 in ...c1 c1 q1 and of
        // u q2 in ...c2 c2 q2 are the same periodic word.
        auto const& [c1, q1] = L.as_infinite_chain();
        auto const& [c2, q2] = K.as_infinite_chain();
        std::size_t const offset = *rotation_offset(c1, c2);
        Element           st = Element::pair(q1, concat(c1.prefix(offset), q2));
        std::size_t const bound = st.height() + 2 * c1.length() + 2;
        if (!conjugation_contained(L, K, st, bound)) {
          return std::nullopt;
        }
        return st;
      }
      case SubsemigroupKind::improper:
        break;
    }
    return std::nullopt;
  }

  bool conjugation_contained(ClosedInvSub const& L,
                             ClosedInvSub const& K,
                             Element const&      st,
                             std::size_t         max_len) {
    Element const ts = inverse(st);
    for (Element const& x : members_bounded(L, max_len)) {
      if (!membership(K, ts * x * st)) {
        return false;
      }
    }
    for (Element const& y : members_bounded(K, max_len)) {
      if (!membership(L, st * y * ts)) {
        return false;
      }
    }
    return true;
  }

}  // namespace gisemi
