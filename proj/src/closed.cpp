#include "gisemi/closed.hpp"

#include <algorithm>
#include <numeric>

#include "gisemi/error.hpp"

namespace gisemi {

  std::string_view to_string(SubsemigroupKind kind) noexcept {
    switch (kind) {
      case SubsemigroupKind::finite_chain:
        return "finite-chain";
      case SubsemigroupKind::infinite_chain:
        return "infinite-chain";
      case SubsemigroupKind::cycle:
        return "cycle";
      case SubsemigroupKind::improper:
        return "improper";
    }
    return "unknown";
  }

  ClosedInvSub ClosedInvSub::finite_chain(Path w) {
    return ClosedInvSub(FiniteChain{std::move(w)});
  }

  ClosedInvSub ClosedInvSub::infinite_chain(Path circuit, Path tail) {
    if (!is_circuit(circuit)) {
      throw Error(ErrorKind::invalid_subsemigroup,
                  "an infinite chain needs a non-empty circuit");
    }
    if (tail.source() != circuit.target()) {
      throw Error(ErrorKind::invalid_subsemigroup,
                  "the tail of an infinite chain must start on its circuit");
    }
    Path const        root   = primitive_root(circuit).root;
    std::size_t const period = root.length();

    // The chain is the suffix family of the left-infinite word ...r r q.
    // Walk the start of the periodic part as far right as it goes; the
    // shortest tail and its rotated circuit are then unique.
    Path const  window = concat(root, tail);
    auto const  edges  = window.edges();
    auto const  at     = [&](std::size_t x) { return edges[edges.size() - x]; };
    std::size_t start  = tail.length();
    while (start > 0 && at(start) == at(start + period)) {
      --start;
    }
    Path canonical_tail    = window.suffix(start);
    Path canonical_circuit = window.suffix(start + period).prefix(period);
    return ClosedInvSub(
        InfiniteChain{std::move(canonical_circuit), std::move(canonical_tail)});
  }

  ClosedInvSub ClosedInvSub::cycle(Path circuit, Path tail) {
    if (!is_circuit(circuit)) {
      throw Error(ErrorKind::invalid_subsemigroup,
                  "a cycle-type subsemigroup needs a non-empty circuit");
    }
    if (tail.source() != circuit.source()) {
      throw Error(ErrorKind::invalid_subsemigroup,
                  "the path d must start at the initial vertex of the circuit");
    }
    if (!tail.empty() && tail.first_edge() == circuit.first_edge()) {
      throw Error(ErrorKind::invalid_subsemigroup,
                  "the circuit and the path share a non-trivial prefix");
    }
    return ClosedInvSub(Cycle{std::move(circuit), std::move(tail)});
  }

  ClosedInvSub ClosedInvSub::make(SubsemigroupKind      kind,
                                  std::span<Path const> paths) {
    auto expect = [&](std::size_t n) {
      if (paths.size() != n) {
        throw Error(ErrorKind::invalid_subsemigroup,
                    std::string(to_string(kind)) + " takes "
                        + std::to_string(n) + " path(s)");
      }
    };
    switch (kind) {
      case SubsemigroupKind::finite_chain:
        expect(1);
        return finite_chain(paths[0]);
      case SubsemigroupKind::infinite_chain:
        expect(2);
        return infinite_chain(paths[0], paths[1]);
      case SubsemigroupKind::cycle:
        expect(2);
        return cycle(paths[0], paths[1]);
      case SubsemigroupKind::improper:
        expect(0);
        return improper();
    }
    throw Error(ErrorKind::invalid_subsemigroup, "unknown kind");
  }

  SubsemigroupKind ClosedInvSub::kind() const noexcept {
    switch (_repr.index()) {
      case 0:
        return SubsemigroupKind::finite_chain;
      case 1:
        return SubsemigroupKind::infinite_chain;
      case 2:
        return SubsemigroupKind::cycle;
      default:
        return SubsemigroupKind::improper;
    }
  }

  namespace {
    [[noreturn]] void wrong_type(SubsemigroupKind want, SubsemigroupKind got) {
      throw Error(ErrorKind::wrong_type,
                  "expected a " + std::string(to_string(want))
                      + " subsemigroup, got " + std::string(to_string(got)));
    }
  }  // namespace

  ClosedInvSub::FiniteChain const& ClosedInvSub::as_finite_chain() const {
    if (auto const* x = std::get_if<FiniteChain>(&_repr)) {
      return *x;
    }
    wrong_type(SubsemigroupKind::finite_chain, kind());
  }

  ClosedInvSub::InfiniteChain const& ClosedInvSub::as_infinite_chain() const {
    if (auto const* x = std::get_if<InfiniteChain>(&_repr)) {
      return *x;
    }
    wrong_type(SubsemigroupKind::infinite_chain, kind());
  }

  ClosedInvSub::Cycle const& ClosedInvSub::as_cycle() const {
    if (auto const* x = std::get_if<Cycle>(&_repr)) {
      return *x;
    }
    wrong_type(SubsemigroupKind::cycle, kind());
  }

  bool membership(ClosedInvSub const& L, Element const& x) {
    switch (L.kind()) {
      case SubsemigroupKind::improper:
        return true;
      case SubsemigroupKind::finite_chain:
        return !x.is_zero() && x.is_idempotent()
               && is_suffix(x.left(), L.as_finite_chain().path);
      case SubsemigroupKind::infinite_chain: {
        if (x.is_zero() || !x.is_idempotent()) {
          return false;
        }
        auto const& [c, q] = L.as_infinite_chain();
        return x.left() == periodic_suffix(c, q, x.left().length());
      }
      case SubsemigroupKind::cycle: {
        if (x.is_zero()) {
          return false;
        }
        auto const&       [p, d] = L.as_cycle();
        std::size_t const i      = x.left().length();
        std::size_t const j      = x.right().length();
        if (x.left() != periodic_suffix(p, d, i)
            || x.right() != periodic_suffix(p, d, j)) {
          return false;
        }
        if (i == j) {
          return true;
        }
        return i >= d.length() && j >= d.length()
               && (std::max(i, j) - std::min(i, j)) % p.length() == 0;
      }
    }
    return false;
  }

  ClosedInvSub generated(std::span<Element const> gens) {
    if (gens.empty()) {
      throw Error(ErrorKind::invalid_subsemigroup,
                  "cannot generate from an empty set");
    }
    if (std::any_of(gens.begin(), gens.end(), [](Element const& x) {
          return x.is_zero();
        })) {
      return ClosedInvSub::improper();
    }

    // Every path met in a proper closed inverse subsemigroup is suffix
    // comparable with every other; otherwise two idempotents multiply to 0.
    std::vector<Path const*> paths;
    for (Element const& x : gens) {
      paths.push_back(&x.left());
      paths.push_back(&x.right());
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        if (!suffix_comparable(*paths[i], *paths[j])) {
          return ClosedInvSub::improper();
        }
      }
    }

    if (std::all_of(gens.begin(), gens.end(), [](Element const& x) {
          return x.is_idempotent();
        })) {
      auto longest = std::max_element(
          paths.begin(), paths.end(), [](Path const* a, Path const* b) {
            return a->length() < b->length();
          });
      return ClosedInvSub::finite_chain(**longest);
    }

    // Each non-idempotent lies below a maximal (d, p d) with p, d sharing
    // no first edge; that element alone generates L_{p,d}. All of them
    // must describe the same d and powers of one primitive circuit, and
    // the exponents combine to their gcd.
    std::optional<Path> tail;
    std::optional<Path> root;
    std::size_t         exponent = 0;
    for (Element const& x : gens) {
      if (x.is_idempotent()) {
        continue;
      }
      Element top = max_above(x);
      if (top.left().length() > top.right().length()) {
        top = inverse(top);
      }
      Path const& d = top.left();
      Path const  p = top.right().prefix(top.right().length() - d.length());
      auto const  r = primitive_root(p);
      if (!tail) {
        tail     = d;
        root     = r.root;
        exponent = r.exponent;
      } else if (*tail != d || *root != r.root) {
        return ClosedInvSub::improper();
      } else {
        exponent = std::gcd(exponent, r.exponent);
      }
    }

    ClosedInvSub L = ClosedInvSub::cycle(power(*root, exponent), *tail);
    for (Element const& x : gens) {
      if (!membership(L, x)) {
        return ClosedInvSub::improper();
      }
    }
    return L;
  }

  VertexId root(ClosedInvSub const& L) {
    return L.as_finite_chain().path.source();
  }

  Element min_idempotent(ClosedInvSub const& L) {
    return Element::idempotent(L.as_finite_chain().path);
  }

  bool is_idempotent_only(ClosedInvSub const& L) noexcept {
    return L.kind() == SubsemigroupKind::finite_chain
           || L.kind() == SubsemigroupKind::infinite_chain;
  }

  std::vector<Element> members_bounded(ClosedInvSub const& L,
                                       std::size_t         max_len,
                                       Graph const*        g) {
    std::vector<Element> result;
    switch (L.kind()) {
      case SubsemigroupKind::improper:
        if (g == nullptr) {
          throw Error(ErrorKind::improper_argument,
                      "enumerating the improper subsemigroup needs a graph");
        }
        result = enumerate_elements(*g, max_len);
        break;
      case SubsemigroupKind::finite_chain: {
        Path const&       w = L.as_finite_chain().path;
        std::size_t const n = std::min(max_len, w.length());
        for (std::size_t i = 0; i <= n; ++i) {
          result.push_back(Element::idempotent(w.suffix(i)));
        }
        break;
      }
      case SubsemigroupKind::infinite_chain: {
        auto const& [c, q] = L.as_infinite_chain();
        for (std::size_t i = 0; i <= max_len; ++i) {
          result.push_back(Element::idempotent(periodic_suffix(c, q, i)));
        }
        break;
      }
      case SubsemigroupKind::cycle: {
        auto const& [p, d] = L.as_cycle();
        std::vector<Path> suffixes;
        for (std::size_t i = 0; i <= max_len; ++i) {
          suffixes.push_back(periodic_suffix(p, d, i));
        }
        for (std::size_t i = 0; i <= max_len; ++i) {
          for (std::size_t j = 0; j <= max_len; ++j) {
            bool const related = i == j
                                 || (i >= d.length() && j >= d.length()
                                     && (std::max(i, j) - std::min(i, j))
                                                % p.length()
                                            == 0);
            if (related) {
              result.push_back(Element::pair(suffixes[i], suffixes[j]));
            }
          }
        }
        break;
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::size_t description_length(ClosedInvSub const& L) noexcept {
    switch (L.kind()) {
      case SubsemigroupKind::finite_chain:
        return L.as_finite_chain().path.length();
      case SubsemigroupKind::infinite_chain: {
        auto const& [c, q] = L.as_infinite_chain();
        return c.length() + q.length();
      }
      case SubsemigroupKind::cycle: {
        auto const& [p, d] = L.as_cycle();
        return p.length() + d.length();
      }
      case SubsemigroupKind::improper:
        return 0;
    }
    return 0;
  }

}  // namespace gisemi
