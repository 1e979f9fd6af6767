#include "gisemi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gisemi/closed.hpp"
#include "gisemi/conjugacy.hpp"
#include "gisemi/cosets.hpp"
#include "gisemi/error.hpp"
#include "gisemi/fixtures.hpp"
#include "gisemi/io.hpp"
#include "gisemi/oracle.hpp"

namespace gisemi::cli {

  namespace {

    using nlohmann::json;

    struct Emission {
      std::vector<std::string> lines;
      json                     result;
      std::optional<json>      witness;
    };

    struct Context {
      Graph                    graph;
      std::vector<std::string> args;
      std::size_t              max_len;
    };

    using Handler = std::function<Emission(Context const&)>;

    struct Verb {
      std::string              name;
      std::string              description;
      std::vector<std::string> operands;
      bool                     variadic = false;
      Handler                  handler;
    };

    Graph load_graph(std::string const& source) {
      namespace fs = std::filesystem;
      std::error_code ec;
      if (fs::is_regular_file(source, ec)) {
        std::ifstream      in(source);
        std::ostringstream text;
        text << in.rdbuf();
        if (!in && !in.eof()) {
          throw Error(ErrorKind::parse, "cannot read graph file " + source);
        }
        return io::parse_graph(text.str());
      }
      if (auto g = fixtures::by_name(source)) {
        return *g;
      }
      throw Error(ErrorKind::parse,
                  "'" + source + "' is neither a graph file nor a fixture");
    }

    std::string bool_text(bool b) {
      return b ? "true" : "false";
    }

    Emission boolean(bool b) {
      return {{bool_text(b)}, b, std::nullopt};
    }

    Emission element_list(Graph const& g, std::vector<Element> const& xs) {
      Emission out;
      out.result = json::array();
      for (Element const& x : xs) {
        auto text = io::format_element(g, x);
        out.lines.push_back(text);
        out.result.push_back(std::move(text));
      }
      return out;
    }

    json witness_json(Graph const& g, EscapeWitness const& w) {
      return {{"circuit", io::format_path(g, w.circuit)},
              {"path", io::format_path(g, w.connector)},
              {"vertex", g.name(w.start)}};
    }

    Emission do_multiply(Context const& c) {
      auto const x = io::parse_element(c.graph, c.args[0]);
      auto const y = io::parse_element(c.graph, c.args[1]);
      auto text    = io::format_element(c.graph, x * y);
      return {{text}, text, std::nullopt};
    }

    Emission do_inverse(Context const& c) {
      auto text = io::format_element(
          c.graph, inverse(io::parse_element(c.graph, c.args[0])));
      return {{text}, text, std::nullopt};
    }

    Emission do_leq(Context const& c) {
      return boolean(natural_leq(io::parse_element(c.graph, c.args[0]),
                                 io::parse_element(c.graph, c.args[1])));
    }

    Emission do_member(Context const& c) {
      return boolean(membership(io::parse_subsemigroup(c.graph, c.args[0]),
                                io::parse_element(c.graph, c.args[1])));
    }

    Emission do_closure(Context const& c) {
      std::vector<Element> gens;
      for (auto const& literal : c.args) {
        gens.push_back(io::parse_element(c.graph, literal));
      }
      auto text = io::format_subsemigroup(c.graph, generated(gens));
      return {{text}, text, std::nullopt};
    }

    Emission do_classify(Context const& c) {
      std::string text(
          to_string(classify(io::parse_subsemigroup(c.graph, c.args[0]))));
      return {{text}, text, std::nullopt};
    }

    Emission do_index(Context const& c) {
      auto const  L      = io::parse_subsemigroup(c.graph, c.args[0]);
      auto const  report = index_report(c.graph, L);
      std::string rule(to_string(report.rule));
      Emission    out;
      if (report.index.is_finite()) {
        out.lines  = {"finite " + std::to_string(report.index.value())};
        out.result = {{"finite", report.index.value()}, {"rule", rule}};
        return out;
      }
      out.lines  = {"infinite"};
      out.result = {{"infinite", true}, {"rule", rule}};
      if (report.witness) {
        auto const& w = *report.witness;
        out.lines.push_back("witness " + rule + " circuit "
                            + io::format_path(c.graph, w.circuit) + " path "
                            + io::format_path(c.graph, w.connector)
                            + " vertex " + c.graph.name(w.start));
        out.witness = witness_json(c.graph, w);
      }
      return out;
    }

    Emission do_cosets(Context const& c) {
      auto const L = io::parse_subsemigroup(c.graph, c.args[0]);
      return element_list(c.graph, coset_representatives(c.graph, L));
    }

    Emission do_same_coset(Context const& c) {
      auto const L = io::parse_subsemigroup(c.graph, c.args[0]);
      return boolean(same_coset(L,
                                io::parse_element(c.graph, c.args[1]),
                                io::parse_element(c.graph, c.args[2])));
    }

    Emission do_conjugate(Context const& c) {
      auto const L        = io::parse_subsemigroup(c.graph, c.args[0]);
      auto const K        = io::parse_subsemigroup(c.graph, c.args[1]);
      bool const verdict  = are_conjugate(L, K);
      Emission   out      = boolean(verdict);
      if (verdict) {
        if (auto st = conjugator(L, K)) {
          auto text = io::format_element(c.graph, *st);
          out.lines.push_back("conjugator " + text);
          out.witness = json{{"conjugator", text}};
        }
      }
      return out;
    }

    Emission do_oracle_index(Context const& c) {
      auto const L = io::parse_subsemigroup(c.graph, c.args[0]);
      oracle::BoundedUniverse const U(c.graph, c.max_len);
      Emission                      out;
      out.result = json::array();
      for (auto const& [bound, cosets] : oracle::index_profile(U, L)) {
        out.lines.push_back("bound " + std::to_string(bound) + " cosets "
                            + std::to_string(cosets));
        out.result.push_back({{"bound", bound}, {"cosets", cosets}});
      }
      return out;
    }

    Emission do_oracle_closure(Context const& c) {
      std::vector<Element> gens;
      for (auto const& literal : c.args) {
        gens.push_back(io::parse_element(c.graph, literal));
      }
      oracle::BoundedUniverse const U(c.graph, c.max_len);
      auto const                    sat = oracle::closure_saturate(U, gens);
      Emission out = element_list(
          c.graph, {sat.elements.begin(), sat.elements.end()});
      if (sat.contains_zero) {
        out.lines.insert(out.lines.begin(), "contains-zero");
        out.witness = json{{"contains_zero", true}};
      }
      return out;
    }

    std::vector<Verb> verbs() {
      return {
          {"multiply", "product of two elements", {"x", "y"}, false, do_multiply},
          {"inverse", "inverse of an element", {"x"}, false, do_inverse},
          {"leq", "natural partial order x <= y", {"x", "y"}, false, do_leq},
          {"member", "membership of an element", {"L", "x"}, false, do_member},
          {"closure", "closed inverse subsemigroup generated by elements",
           {"x"}, true, do_closure},
          {"classify", "kind of a subsemigroup", {"L"}, false, do_classify},
          {"index", "index of a subsemigroup", {"L"}, false, do_index},
          {"cosets", "coset representatives", {"L"}, false, do_cosets},
          {"same-coset", "whether two elements represent the same coset",
           {"L", "x", "y"}, false, do_same_coset},
          {"conjugate", "conjugacy test with a conjugating element",
           {"L", "K"}, false, do_conjugate},
          {"oracle-index", "brute-force coset count per length bound",
           {"L"}, false, do_oracle_index},
          {"oracle-closure", "brute-force closure inside a bounded universe",
           {"x"}, true, do_oracle_closure},
      };
    }

    void emit(std::ostream&   out,
              std::string const& verb,
              Emission const& e,
              bool            as_json) {
      if (as_json) {
        json doc = {{"verb", verb}, {"result", e.result}};
        if (e.witness) {
          doc["witness"] = *e.witness;
        }
        out << doc.dump() << '\n';
        return;
      }
      for (auto const& line : e.lines) {
        out << line << '\n';
      }
    }

    int report_error(std::ostream& err, Error const& e) {
      err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
      return e.kind() == ErrorKind::parse ? parse_error : domain_error;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Graph inverse semigroup calculator", "gisemi"};
    app.require_subcommand(1);

    bool        as_json = false;
    std::size_t max_len = oracle::default_max_len;
    std::string graph_source;
    std::vector<std::string> operands;
    std::string fixture_name;

    auto const table = verbs();
    for (auto const& verb : table) {
      auto* sub = app.add_subcommand(verb.name, verb.description);
      sub->add_flag("--json", as_json, "emit JSON");
      sub->add_option("--maxlen", max_len, "length bound for oracle verbs");
      sub->add_option("graph", graph_source, "graph file or fixture name")
          ->required();
      auto* opt = sub->add_option("operands", operands, "literals")
                      ->required();
      if (verb.variadic) {
        opt->expected(1, CLI::detail::expected_max_vector_size);
      } else {
        opt->expected(static_cast<int>(verb.operands.size()));
      }
    }
    auto* fixtures_cmd
        = app.add_subcommand("fixtures", "list fixtures or print one");
    fixtures_cmd->add_flag("--json", as_json, "emit JSON");
    fixtures_cmd->add_option("name", fixture_name, "fixture to print");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: parse-error: " << e.what() << '\n';
      return parse_error;
    }

    try {
      if (fixtures_cmd->parsed()) {
        Emission e;
        if (fixture_name.empty()) {
          e.result = json::array();
          for (auto const& name : fixtures::names()) {
            e.lines.push_back(name);
            e.result.push_back(name);
          }
        } else {
          auto g = fixtures::by_name(fixture_name);
          if (!g) {
            throw Error(ErrorKind::parse,
                        "unknown fixture '" + fixture_name + "'");
          }
          auto text = io::format_graph(*g);
          e.result  = text;
          text.pop_back();
          e.lines = {text};
        }
        emit(out, "fixtures", e, as_json);
        return ok;
      }
      for (auto const& verb : table) {
        if (app.got_subcommand(verb.name)) {
          Context const ctx{load_graph(graph_source), operands, max_len};
          emit(out, verb.name, verb.handler(ctx), as_json);
          return ok;
        }
      }
    } catch (Error const& e) {
      return report_error(err, e);
    }
    err << "error: parse-error: no command given\n";
    return parse_error;
  }

}  // namespace gisemi::cli
