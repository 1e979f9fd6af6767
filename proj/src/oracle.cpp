#include "gisemi/oracle.hpp"

#include <algorithm>

#include "gisemi/conjugacy.hpp"
#include "gisemi/path_counting.hpp"

namespace gisemi::oracle {

  BoundedUniverse::BoundedUniverse(Graph g, std::size_t max_len)
      : _graph(std::move(g)),
        _max_len(max_len),
        _elements(enumerate_elements(_graph, max_len)) {}

  Saturation closure_saturate(BoundedUniverse const&   U,
                              std::span<Element const> gens) {
    Saturation           result;
    std::vector<Element> order;

    auto add = [&](Element const& x) {
      if (x.is_zero()) {
        result.contains_zero = true;
        return;
      }
      if (U.contains(x) && result.elements.insert(x).second) {
        order.push_back(x);
      }
    };

    for (Element const& x : gens) {
      add(x);
    }
    for (std::size_t i = 0; i < order.size() && !result.contains_zero; ++i) {
      Element const a = order[i];
      add(inverse(a));
      for (Element const& above : up_set(a)) {
        add(above);
      }
      for (std::size_t j = 0; j <= i && !result.contains_zero; ++j) {
        Element const ab = a * order[j];
        add(ab);
        Element const ba = order[j] * a;
        add(ba);
      }
    }
    if (result.contains_zero) {
      result.elements = std::set<Element>(U.elements().begin(),
                                          U.elements().end());
    }
    return result;
  }

  std::vector<ProfilePoint> index_profile(BoundedUniverse const& U,
                                          ClosedInvSub const&    L) {
    std::vector<Element> candidates;
    for (Element const& t : U.elements()) {
      if (!t.is_zero() && membership(L, t * inverse(t))) {
        candidates.push_back(t);
      }
    }
    std::stable_sort(candidates.begin(),
                     candidates.end(),
                     [](Element const& x, Element const& y) {
                       return x.height() < y.height();
                     });

    std::vector<Element>      inverse_reps;
    std::vector<ProfilePoint> profile;
    std::size_t               next = 0;
    for (std::size_t bound = 0; bound <= U.max_len(); ++bound) {
      for (; next < candidates.size() && candidates[next].height() <= bound;
           ++next) {
        Element const& t     = candidates[next];
        bool const     known = std::any_of(
            inverse_reps.begin(), inverse_reps.end(), [&](Element const& r) {
              return membership(L, t * r);
            });
        if (!known) {
          inverse_reps.push_back(inverse(t));
        }
      }
      profile.push_back({bound, inverse_reps.size()});
    }
    return profile;
  }

  std::optional<std::pair<Path, Path>>
  chain_extension_witness(Graph const&        g,
                          ClosedInvSub const& L,
                          ClosedInvSub const& K,
                          std::size_t         max_len) {
    auto idempotent_paths = [&](ClosedInvSub const& M) {
      std::vector<Path> result;
      for (Element const& x : members_bounded(M, max_len)) {
        if (x.is_idempotent()) {
          result.push_back(x.left());
        }
      }
      return result;
    };
    auto const paths = enumerate_paths(g, max_len);

    auto extends = [](ClosedInvSub const& M, Path const& p, Path const& s) {
      return p.target() == s.source()
             && membership(M, Element::idempotent(concat(p, s)));
    };

    for (Path const& s : idempotent_paths(L)) {
      for (Path const& t : idempotent_paths(K)) {
        bool const agree
            = std::all_of(paths.begin(), paths.end(), [&](Path const& p) {
                return extends(L, p, s) == extends(K, p, t);
              });
        if (agree) {
          return std::make_pair(s, t);
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Element> search_conjugator(Graph const&        g,
                                           ClosedInvSub const& L,
                                           ClosedInvSub const& K,
                                           std::size_t         search_len,
                                           std::size_t         check_len) {
    for (Element const& st : enumerate_elements(g, search_len)) {
      if (!st.is_zero() && conjugation_contained(L, K, st, check_len)) {
        return st;
      }
    }
    return std::nullopt;
  }

}  // namespace gisemi::oracle
