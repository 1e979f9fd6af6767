#include <doctest.h>

#include <set>

#include "gisemi/closed.hpp"
#include "gisemi/error.hpp"
#include "gisemi/fixtures.hpp"
#include "gisemi/io.hpp"
#include "gisemi/oracle.hpp"
#include "support/catalogue.hpp"
#include "support/reference.hpp"

using namespace gisemi;

namespace {

  Element E(Graph const& g, std::string_view literal) {
    return io::parse_element(g, literal);
  }
  Path P(Graph const& g, std::string_view literal) {
    return io::parse_path(g, literal);
  }
  ClosedInvSub L(Graph const& g, std::string_view literal) {
    return io::parse_subsemigroup(g, literal);
  }

}  // namespace

TEST_SUITE("closed_subsemigroups") {
  TEST_CASE("make validates its arguments") {
    auto const g     = fixtures::loopx();
    auto const loop1 = fixtures::loop1();

    Path const cyc[] = {P(g, "a.a"), P(g, "e.f")};
    auto const L27   = ClosedInvSub::make(SubsemigroupKind::cycle, cyc);
    CHECK(L27.kind() == SubsemigroupKind::cycle);
    CHECK(L27.as_cycle().circuit == P(g, "a.a"));

    Path const bad[] = {P(g, "e.f"), P(g, "e.f")};
    CHECK_THROWS_AS(ClosedInvSub::make(SubsemigroupKind::cycle, bad), Error);
    CHECK_THROWS_AS(L(g, "cycle a.a a.e"), Error);
    CHECK_THROWS_AS(L(g, "cycle a f"), Error);

    Path const inf[] = {P(loop1, "a.a"), P(loop1, "@x")};
    auto const K = ClosedInvSub::make(SubsemigroupKind::infinite_chain, inf);
    CHECK(K.as_infinite_chain().circuit == P(loop1, "a"));
    CHECK(K.as_infinite_chain().tail == P(loop1, "@x"));
    CHECK(K == L(loop1, "infchain a a.a.a"));
  }

  TEST_CASE("infinite chains are canonical") {
    auto const p2 = fixtures::bouquet(2);
    // ...ababa and ...baba are the same left-infinite word.
    CHECK(L(p2, "infchain a.b a") == L(p2, "infchain b.a @*"));
    CHECK(L(p2, "infchain a.b a.b.b") == L(p2, "infchain a.b b"));
    CHECK_FALSE(L(p2, "infchain a.b b") == L(p2, "infchain a.b @*"));
    CHECK_THROWS_AS(L(p2, "infchain a.b"), Error);
  }

  TEST_CASE("membership") {
    auto const g   = fixtures::loopx();
    auto const L27 = L(g, "cycle a.a e.f");
    CHECK(membership(L27, E(g, "(e.f|a.a.e.f)")));
    CHECK_FALSE(membership(L27, E(g, "(e.f|a.e.f)")));
    CHECK(membership(L27, E(g, "(f|f)")));
    CHECK_FALSE(membership(L27, E(g, "0")));
    CHECK_FALSE(membership(L27, E(g, "(g|g)")));
    CHECK(membership(ClosedInvSub::improper(), E(g, "0")));
    CHECK(membership(L(g, "chain e.f"), E(g, "(@z|@z)")));
    CHECK_FALSE(membership(L(g, "chain e.f"), E(g, "(a.e.f|a.e.f)")));
  }

  TEST_CASE("membership agrees with closure saturation") {
    // Elements of the cycle type read off from the left-infinite word.
    auto const loop1 = fixtures::loop1();
    oracle::BoundedUniverse const U(loop1, 6);
    Element const                 gens[] = {E(loop1, "(@x|a.a)")};
    auto const                    sat    = oracle::closure_saturate(U, gens);
    CHECK_FALSE(sat.contains_zero);
    auto const members = members_bounded(L(loop1, "cycle a.a @x"), 6);
    CHECK(sat.elements == std::set(members.begin(), members.end()));
    for (auto const& x : U.elements()) {
      if (x.is_zero()) {
        continue;
      }
      bool const even = (x.left().length() + x.right().length()) % 2 == 0;
      CHECK(membership(L(loop1, "cycle a.a @x"), x) == even);
    }
  }

  TEST_CASE("generated") {
    auto const g     = fixtures::loopx();
    auto const loop1 = fixtures::loop1();

    Element const one[] = {E(g, "(e.f|a.a.e.f)")};
    CHECK(generated(one) == L(g, "cycle a.a e.f"));

    Element const idem[] = {E(g, "(f|f)"), E(g, "(e.f|e.f)")};
    CHECK(generated(idem) == L(g, "chain e.f"));

    Element const gcd[] = {E(loop1, "(@x|a.a)"), E(loop1, "(@x|a.a.a)")};
    CHECK(generated(gcd) == L(loop1, "cycle a @x"));

    Element const apart[] = {E(g, "(g|g)"), E(g, "(e.f|e.f)")};
    CHECK(classify(generated(apart)) == SubsemigroupKind::improper);

    Element const zero[] = {E(g, "0")};
    CHECK_FALSE(generated(zero).is_proper());

    // Down-shifted generators normalise to the maximal element.
    Element const low[] = {E(g, "(a.e.f|a.a.a.e.f)")};
    CHECK(generated(low) == L(g, "cycle a.a e.f"));

    Element const inverse_gen[] = {E(g, "(a.a.e.f|e.f)")};
    CHECK(generated(inverse_gen) == L(g, "cycle a.a e.f"));
  }

  TEST_CASE("classify, root and min_idempotent") {
    auto const g = fixtures::loopx();
    CHECK(classify(L(g, "cycle a.a e.f")) == SubsemigroupKind::cycle);
    CHECK(classify(L(g, "chain e.f")) == SubsemigroupKind::finite_chain);
    CHECK(classify(L(g, "infchain a e")) == SubsemigroupKind::infinite_chain);
    CHECK(to_string(SubsemigroupKind::finite_chain) == "finite-chain");

    CHECK(root(L(g, "chain e.f")) == g.vertex("x"));
    CHECK(root(L(g, "chain @z")) == g.vertex("z"));
    auto const chain3 = fixtures::chain(3);
    CHECK(root(L(chain3, "chain e3.e2.e1")) == chain3.vertex("v3"));
    CHECK_THROWS_AS(root(L(g, "cycle a.a e.f")), Error);

    CHECK(min_idempotent(L(g, "chain e.f")) == E(g, "(e.f|e.f)"));
    CHECK(min_idempotent(L(g, "chain @x")) == E(g, "(@x|@x)"));
    CHECK(min_idempotent(L(g, "chain f")) == E(g, "(f|f)"));
    CHECK_THROWS_AS(min_idempotent(L(g, "infchain a @x")), Error);
  }

  TEST_CASE("distinct powers give distinct subsemigroups") {
    auto const g = fixtures::loopx();
    CHECK_FALSE(membership(L(g, "cycle a.a e.f"), E(g, "(e.f|a.e.f)")));
    auto const p2 = fixtures::bouquet(2);
    CHECK_FALSE(membership(L(p2, "cycle a.b.a.b @*"), E(p2, "(@*|a.b)")));
  }

  TEST_CASE("generated contains its generators and matches saturation") {
    std::vector<Graph> graphs{fixtures::loop1(),
                              fixtures::loopx(),
                              fixtures::bouquet(2),
                              fixtures::chain(3)};
    for (auto const& g : graphs) {
      oracle::BoundedUniverse const U(g, 6);
      auto const                    xs = enumerate_elements(g, 2);
      ref::for_tuples(xs.size(), 2, 400, 5, [&](auto const& i) {
        std::vector<Element> gens;
        for (auto k : i) {
          if (!xs[k].is_zero()) {
            gens.push_back(xs[k]);
          }
        }
        if (gens.empty()) {
          return;
        }
        auto const Lg  = generated(gens);
        auto const sat = oracle::closure_saturate(U, gens);
        for (auto const& b : gens) {
          REQUIRE(membership(Lg, b));
        }
        REQUIRE(sat.contains_zero == !Lg.is_proper());
        if (Lg.is_proper()) {
          auto const slice = members_bounded(Lg, 6);
          REQUIRE(sat.elements == std::set(slice.begin(), slice.end()));
        }
      });
    }
  }

  TEST_CASE("acyclic graphs only give finite chains") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const g  = fixtures::chain(n);
      auto const xs = enumerate_elements(g, n);
      ref::for_tuples(xs.size(), 2, 5000, 3, [&](auto const& i) {
        Element const gens[] = {xs[i[0]], xs[i[1]]};
        auto const    k      = classify(generated(gens));
        REQUIRE(k != SubsemigroupKind::cycle);
        REQUIRE(k != SubsemigroupKind::infinite_chain);
      });
    }
  }

  TEST_CASE("membership is upward closed and multiplicative") {
    std::vector<Graph> graphs{fixtures::loop1(),
                              fixtures::loopx(),
                              fixtures::bouquet(2)};
    for (auto const& g : graphs) {
      for (auto const& Lc : ref::catalogue(g, 2, 2, 1)) {
        auto const members = members_bounded(Lc, 4);
        for (auto const& x : members) {
          REQUIRE(membership(Lc, x));
          for (auto const& y : up_set(x)) {
            REQUIRE(membership(Lc, y));
          }
          REQUIRE(membership(Lc, inverse(x)));
          for (auto const& y : members) {
            auto const xy = x * y;
            REQUIRE_FALSE(xy.is_zero());
            REQUIRE(membership(Lc, xy));
          }
        }
      }
    }
  }

  TEST_CASE("members_bounded needs a graph for the improper case") {
    auto const g = fixtures::loop1();
    CHECK_THROWS_AS(members_bounded(ClosedInvSub::improper(), 2), Error);
    CHECK(members_bounded(ClosedInvSub::improper(), 2, &g).size() == 10);
  }
}
