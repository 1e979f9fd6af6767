#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "gisemi/cli.hpp"
#include "gisemi/error.hpp"
#include "gisemi/fixtures.hpp"
#include "gisemi/io.hpp"
#include "gisemi/path_counting.hpp"

using namespace gisemi;

namespace {

  struct Outcome {
    int         status;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  std::string fixture_file(std::string const& name) {
    return std::string(GISEMI_FIXTURE_DIR) + "/" + name + ".graph";
  }

}  // namespace

TEST_SUITE("cli_io") {
  TEST_CASE("graph text round trip") {
    auto const g    = io::parse_graph("# two loops\nvertex *\nedge a * *\n"
                                      "edge b * *   # second\n\n");
    auto const text = io::format_graph(g);
    CHECK(text == "vertex *\nedge a * *\nedge b * *\n");
    CHECK(io::format_graph(io::parse_graph(text)) == text);
    CHECK(text == io::format_graph(fixtures::bouquet(2)));
  }

  TEST_CASE("graph parse errors") {
    for (auto const* bad : {"vertex", "edge a x x\n", "vertex x\nedge a x y\n",
                            "vertex x\nvertex x\n", "node x\n", "",
                            "vertex x.y\n"}) {
      try {
        (void)io::parse_graph(bad);
        FAIL("accepted: " << bad);
      } catch (Error const& e) {
        CHECK(e.kind() == ErrorKind::parse);
      }
    }
  }

  TEST_CASE("literal round trip") {
    for (auto const& g : {fixtures::loopx(), fixtures::bouquet(2),
                          fixtures::chain(3), fixtures::loopx_fprime()}) {
      for (auto const& x : enumerate_elements(g, 2)) {
        auto const text = io::format_element(g, x);
        CHECK(io::parse_element(g, text) == x);
      }
      for (auto const& p : enumerate_paths(g, 3)) {
        CHECK(io::parse_path(g, io::format_path(g, p)) == p);
      }
    }
    auto const g = fixtures::loopx();
    for (auto const* literal : {"chain e.f", "cycle a.a e.f", "infchain a e",
                                "improper"}) {
      auto const Lc = io::parse_subsemigroup(g, literal);
      CHECK(io::format_subsemigroup(g, Lc) == literal);
    }
  }

  TEST_CASE("literal errors") {
    auto const g = fixtures::loopx();
    auto kind_of = [&](auto&& f) {
      try {
        f();
      } catch (Error const& e) {
        return e.kind();
      }
      FAIL("no error");
      return ErrorKind::parse;
    };
    CHECK(kind_of([&] { io::parse_path(g, "e.q"); }) == ErrorKind::parse);
    CHECK(kind_of([&] { io::parse_path(g, "e..f"); }) == ErrorKind::parse);
    CHECK(kind_of([&] { io::parse_path(g, "@w"); }) == ErrorKind::parse);
    CHECK(kind_of([&] { io::parse_path(g, "f.e"); })
          == ErrorKind::composition_undefined);
    CHECK(kind_of([&] { io::parse_element(g, "(e|f"); }) == ErrorKind::parse);
    CHECK(kind_of([&] { io::parse_element(g, "(e|f)"); })
          == ErrorKind::vertex_mismatch);
    CHECK(kind_of([&] { io::parse_subsemigroup(g, "ring a"); })
          == ErrorKind::parse);
  }

  TEST_CASE("command examples") {
    auto const index
        = run({"index", fixture_file("loopx"), "cycle a.a e.f"});
    CHECK(index.status == cli::ok);
    CHECK(index.out == "finite 12\n");

    auto const product = run({"multiply", fixture_file("loop1"), "(@x|a.a)",
                              "(a|@x)"});
    CHECK(product.out == "(@x|a)\n");

    auto const member = run({"member", fixture_file("loopx"),
                             "cycle a.a e.f", "(e.f|a.e.f)"});
    CHECK(member.out == "false\n");
  }

  TEST_CASE("every verb runs") {
    CHECK(run({"inverse", "loopx", "(e.f|a.e.f)"}).out == "(a.e.f|e.f)\n");
    CHECK(run({"leq", "loopx", "(e.f|e.f)", "(f|f)"}).out == "true\n");
    CHECK(run({"closure", "loop1", "(@x|a.a)", "(@x|a.a.a)"}).out
          == "cycle a @x\n");
    CHECK(run({"classify", "loopx", "chain e.f"}).out == "finite-chain\n");
    CHECK(run({"cosets", "chain2", "chain e2.e1"}).out
          == "(e2.e1|@v2)\n(e1|@v1)\n(@v0|@v0)\n");
    CHECK(run({"same-coset", "loopx", "cycle a.a e.f", "(e.f|a.g)",
               "(a.a.e.f|a.a.a.g)"})
              .out
          == "true\n");
    CHECK(run({"conjugate", "bouquet2", "cycle a.b @*", "cycle b.a @*"}).out
          == "true\nconjugator (b|@*)\n");
    CHECK(run({"oracle-index", "chain2", "chain e2.e1", "--maxlen", "3"}).out
          == "bound 0 cosets 1\nbound 1 cosets 2\nbound 2 cosets 3\n"
             "bound 3 cosets 3\n");
    CHECK(run({"oracle-closure", "loopx", "(e.f|e.f)", "--maxlen", "3"}).out
          == "(e.f|e.f)\n(f|f)\n(@z|@z)\n");
    CHECK(run({"fixtures"}).status == cli::ok);
    CHECK(run({"fixtures", "loop1"}).out == "vertex x\nedge a x x\n");
  }

  TEST_CASE("infinite index emits a witness") {
    auto const text = run({"index", "loopx_fprime", "cycle a.a e.f"});
    CHECK(text.out
          == "infinite\nwitness escape-circuit circuit e.f.f' path @x "
             "vertex x\n");
    auto const js = run({"index", "--json", "loopx_fprime", "cycle a.a e.f"});
    auto const doc = nlohmann::json::parse(js.out);
    CHECK(doc["verb"] == "index");
    CHECK(doc["result"]["infinite"] == true);
    CHECK(doc["witness"]["circuit"] == "e.f.f'");
    CHECK(doc["witness"]["path"] == "@x");
    CHECK(doc["witness"]["vertex"] == "x");

    auto const finite = nlohmann::json::parse(
        run({"index", "--json", "loopx", "cycle a.a e.f"}).out);
    CHECK(finite["result"]["finite"] == 12);
    CHECK_FALSE(finite.contains("witness"));
  }

  TEST_CASE("exit statuses") {
    auto const unknown_edge = run({"multiply", "loopx", "(e.q|e)", "0"});
    CHECK(unknown_edge.status == cli::parse_error);
    CHECK(unknown_edge.err.find("parse-error") != std::string::npos);

    auto const mismatch = run({"inverse", "loopx", "(e|f)"});
    CHECK(mismatch.status == cli::domain_error);
    CHECK(mismatch.err.find("initial-vertex-mismatch") != std::string::npos);

    auto const infinite = run({"cosets", "loop1", "chain a"});
    CHECK(infinite.status == cli::domain_error);

    CHECK(run({"frobnicate", "loopx"}).status == cli::parse_error);
    CHECK(run({"multiply", "loopx", "(f|f)"}).status == cli::parse_error);
    CHECK(run({"index", "no-such-graph", "improper"}).status
          == cli::parse_error);
    CHECK(run({}).status == cli::parse_error);
  }

  TEST_CASE("output is deterministic") {
    std::vector<std::string> const args{"cosets", "--json", "loopx",
                                        "cycle a.a e.f"};
    CHECK(run(args).out == run(args).out);
  }
}
