#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcp/coloring.hpp"
#include "bcp/decomposition.hpp"
#include "bcp/dispersability.hpp"
#include "bcp/embedding.hpp"
#include "bcp/generators.hpp"
#include "bcp/graph.hpp"
#include "bcp/io.hpp"
#include "bcp/planar.hpp"
#include "bcp/svg.hpp"
#include "bcp/verify.hpp"

namespace bcp::cli {

enum ExitCode { kOk = 0, kInvalidInput = 1, kInternal = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

inline Graph generate(const std::string& family, const std::vector<int>& params, std::uint64_t seed) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw InvalidInput(std::string("gen ") + family + ": usage " + usage);
  };
  if (family == "cube") {
    need(0, "gen cube");
    return gen_cube();
  }
  if (family == "prism") {
    need(1, "gen prism M");
    return gen_prism(params[0]);
  }
  if (family == "ladder") {
    need(1, "gen ladder K");
    if (params[0] < 1) throw InvalidInput("gen ladder: K must be at least 1");
    return gen_ladder(params[0]);
  }
  if (family == "join") {
    need(3, "gen join M_LEFT M_RIGHT K");
    return gen_prism_join(params[0], params[1], params[2], seed);
  }
  if (family == "chain") {
    if (params.size() < 3 || params.size() % 2 == 0) {
      throw InvalidInput("gen chain: usage gen chain M1 K1 M2 [K2 M3 ...]");
    }
    std::vector<int> sizes;
    std::vector<int> ladders;
    for (std::size_t i = 0; i < params.size(); ++i) (i % 2 == 0 ? sizes : ladders).push_back(params[i]);
    return gen_chain(sizes, ladders, seed);
  }
  throw InvalidInput("gen: unknown family \"" + family + "\" (expected ladder, prism, cube, join or chain)");
}

inline json check_report(const Graph& g) {
  const bool connected = is_connected(g);
  const bool cubic = is_cubic(g);
  const bool bipartite = is_bipartite(g);
  const bool planar = is_planar(g);
  json report{{"n", g.order()},        {"m", g.size()},       {"connected", connected},
              {"cubic", cubic},        {"bipartite", bipartite}, {"planar", planar},
              {"bcp", connected && cubic && bipartite && planar}};
  if (connected && cubic) {
    report["vertex_connectivity"] = vertex_connectivity(g);
    report["edge_connectivity"] = edge_connectivity(g);
  }
  if (planar && connected) report["euler_characteristic"] = euler_characteristic(*planar_embedding(g));
  return report;
}

}  // namespace detail

/// Runs one command line. JSON (or SVG / graph6) goes to `io.out`, diagnostics
/// to `io.err`. Returns 0 on success, 1 on invalid input or a failed
/// verification, 2 when the library trips one of its own assertions.
inline int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Three-page matching book embeddings of bipartite cubic planar graphs", "bcp"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string embedding_path;
  std::string format = "json";
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 1;
  int pages = 3;
  int limit = OracleOptions{}.vertex_limit;

  auto* check = app.add_subcommand("check", "Report structural predicates of a graph");
  auto* color = app.add_subcommand("color", "3-face-coloring and induced 3-edge-coloring");
  auto* decompose = app.add_subcommand("decompose", "Ternary decomposition at 2-edge-cuts");
  auto* embed_cmd = app.add_subcommand("embed", "3-page matching book embedding");
  auto* verify = app.add_subcommand("verify", "Check an embedding against a graph");
  auto* mbt = app.add_subcommand("mbt", "Exact matching book thickness by exhaustive search");
  auto* gen = app.add_subcommand("gen", "Generate a graph: ladder K | prism M | cube | join ML MR K | chain M1 K1 M2 ...");
  auto* render = app.add_subcommand("render", "SVG arc diagram of an embedding");

  for (auto* sub : {check, color, decompose, embed_cmd, mbt}) {
    sub->add_option("input", input, "Graph file (JSON or graph6), - for stdin");
  }
  verify->add_option("graph", input, "Graph file (JSON or graph6), - for stdin")->required();
  verify->add_option("embedding", embedding_path, "Embedding JSON file")->required();
  verify->add_option("--pages", pages, "Page bound")->check(CLI::PositiveNumber);
  mbt->add_option("--pages", pages, "Page bound; larger values report \"exceeds bound\"")
      ->check(CLI::PositiveNumber);
  mbt->add_option("--limit", limit, "Largest vertex count the enumeration accepts")->check(CLI::PositiveNumber);
  gen->add_option("family", family, "ladder, prism, cube, join or chain")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Seed for the join attachment edges");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "graph6"}));
  render->add_option("graph", input, "Graph file (JSON or graph6), - for stdin")->required();
  render->add_option("embedding", embedding_path, "Embedding JSON; computed when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    io.err << app.help();
    return kInvalidInput;
  }

  try {
    if (gen->parsed()) {
      const Graph g = detail::generate(family, params, seed);
      if (format == "graph6") {
        io.out << emit_graph6(g) << '\n';
      } else {
        io.out << graph_to_json(g).dump() << '\n';
      }
      return kOk;
    }

    const Graph g = parse_graph(detail::slurp(input, io.in));

    if (check->parsed()) {
      const json report = detail::check_report(g);
      io.out << report.dump(2) << '\n';
      return kOk;
    }
    if (color->parsed()) {
      const auto emb = planar_embedding(g);
      if (!emb) throw InvalidInput("graph is not planar");
      const auto fc = three_face_coloring(*emb);
      const auto ec = induced_edge_coloring(*emb, fc);
      bcp::detail::ensure(verify_edge_coloring(g, ec), "induced edge coloring is not proper");
      io.out << coloring_to_json(g, fc, ec).dump(2) << '\n';
      return kOk;
    }
    if (decompose->parsed()) {
      const auto tree = ternary_decompose(g);
      bcp::detail::ensure(reassemble(tree).edges() == g.edges(), "decomposition does not reassemble to the input");
      io.err << "decomposition: " << tree.join_count() << " join(s), " << tree.leaf_count() << " leaf(s), height "
             << tree.height() << '\n';
      io.out << decomposition_to_json(tree).dump(2) << '\n';
      return kOk;
    }
    if (embed_cmd->parsed()) {
      io.out << embedding_to_json(g, embed(g)).dump(2) << '\n';
      return kOk;
    }
    if (verify->parsed()) {
      const auto be = embedding_from_json(g, detail::parse_json(detail::slurp(embedding_path, io.in), "embedding JSON"));
      const auto violations = verify_matching_book_embedding(g, be, pages);
      json list = json::array();
      for (const auto& v : violations) {
        list.push_back(violation_to_json(v));
        io.err << describe(v) << '\n';
      }
      io.out << json{{"valid", violations.empty()},
                     {"pages", pages},
                     {"pages_used", be.page_count()},
                     {"violations", std::move(list)}}
                    .dump(2)
             << '\n';
      if (!violations.empty()) io.err << violations.size() << " violation(s)\n";
      return violations.empty() ? kOk : kInvalidInput;
    }
    if (mbt->parsed()) {
      const int bound = mbt->count("--pages") > 0 ? pages : g.size();
      const auto value = mbt_oracle(g, bound, {.vertex_limit = limit});
      json result{{"max_degree", g.max_degree()}, {"bound", bound}};
      if (value) {
        result["mbt"] = *value;
        result["dispersable"] = *value == g.max_degree();
      } else {
        result["mbt"] = "exceeds bound";
      }
      io.out << result.dump(2) << '\n';
      return kOk;
    }
    if (render->parsed()) {
      const BookEmbedding be =
          embedding_path.empty()
              ? embed(g)
              : embedding_from_json(g, detail::parse_json(detail::slurp(embedding_path, io.in), "embedding JSON"));
      io.out << render_svg(g, be);
      return kOk;
    }
  } catch (const InvalidInput& e) {
    io.err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Unsupported& e) {
    io.err << "unsupported: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    io.err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

inline int run(int argc, const char* const* argv) { return run(argc, argv, {std::cin, std::cout, std::cerr}); }

}  // namespace bcp::cli
