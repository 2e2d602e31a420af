#include "cli.hpp"

#include "vrsp/decomposition.hpp"
#include "vrsp/error.hpp"
#include "vrsp/io.hpp"
#include "vrsp/isomorphism.hpp"
#include "vrsp/products.hpp"
#include "vrsp/quotient.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <ostream>

namespace vrsp::cli {

namespace {

using json = nlohmann::ordered_json;

Graph load(const std::string& path) {
  try {
    return io::parse_graph(io::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.details());
  }
}

VertexFamily load_family(const std::string& path) {
  try {
    return io::parse_family(io::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.details());
  }
}

void emit(const std::string& target, const std::string& text, std::ostream& out) {
  if (target.empty() || target == "-")
    out << text;
  else
    io::write_file(target, text);
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorCode::schema_error, what + ": '" + text + "' is not a non-negative integer");
  return value;
}

json label_array(const std::set<LabelPair>& labels) {
  json out = json::array();
  for (const LabelPair& l : labels)
    out.push_back(l.to_string());
  return out;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Labelled DAG products, contraction and Cartesian decomposition"};
  app.require_subcommand(1);

  std::string graph_path, second_path, output;

  auto* validate_cmd = app.add_subcommand("validate", "Check a graph document");
  validate_cmd->add_option("graph", graph_path, "Graph JSON")->required();

  std::string kind;
  auto* product_cmd = app.add_subcommand("product", "Cartesian, intermediate or vertex-removing product");
  product_cmd->add_option("--kind", kind, "cartesian | intermediate | vrsp")
      ->required()
      ->check(CLI::IsMember({"cartesian", "intermediate", "vrsp"}));
  product_cmd->add_option("left", graph_path, "First factor")->required();
  product_cmd->add_option("right", second_path, "Second factor")->required();
  product_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string set_text, new_id;
  auto* contract_cmd = app.add_subcommand("contract", "Contract a vertex set into one vertex");
  contract_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  contract_cmd->add_option("--set", set_text, "Comma-separated vertex ids")->required();
  contract_cmd->add_option("--id", new_id, "Id of the new vertex")->required();
  contract_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* iso_cmd = app.add_subcommand("iso", "Decide label-preserving isomorphism");
  iso_cmd->add_option("left", graph_path, "First graph")->required();
  iso_cmd->add_option("right", second_path, "Second graph")->required();

  std::string rows_path, cols_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a row/column decomposition");
  verify_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  verify_cmd->add_option("--rows", rows_path, "Row family file")->required();
  verify_cmd->add_option("--cols", cols_path, "Column family file")->required();

  bool recursive = false;
  std::string max_labels_text, out_dir;
  auto* decompose_cmd = app.add_subcommand("decompose", "Search label bipartitions for Cartesian decompositions");
  decompose_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  decompose_cmd->add_flag("--recursive", recursive, "Factor recursively down to prime factors");
  decompose_cmd->add_option("--max-labels", max_labels_text, "Label cap (default 20, env VRSP_MAX_LABELS)");
  decompose_cmd->add_option("--out-dir", out_dir, "Write factor graphs to this directory");

  auto* dot_cmd = app.add_subcommand("dot", "Render a graph as Graphviz DOT");
  dot_cmd->add_option("graph", graph_path, "Graph JSON")->required();
  dot_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<const char*> argv;
  for (const std::string& a : args)
    argv.push_back(a.c_str());
  if (argv.empty())
    argv.push_back("vrsp");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (validate_cmd->parsed()) {
      std::string text = io::read_file(graph_path);
      Graph g;
      try {
        g = io::parse_graph(text);
      } catch (const Error& e) {
        err << graph_path << ": " << e.what() << "\n";
        for (const std::string& d : e.details())
          err << "  " << d << "\n";
        return input_error;
      }
      out << graph_path << ": valid, " << g.vertex_count() << " vertices, " << g.arc_count() << " arcs, "
          << weak_components(g).size() << " weak component(s)\n";
      return ok;
    }

    if (product_cmd->parsed()) {
      Graph left = load(graph_path);
      Graph right = load(second_path);
      if (kind == "cartesian") {
        Graph p = cartesian(left, right);
        emit(output, io::emit_graph(p), out);
        err << "cartesian: " << p.vertex_count() << " vertices, " << p.arc_count() << " arcs\n";
      } else {
        SyncProduct p = kind == "vrsp" ? vrsp(left, right) : intermediate(left, right);
        emit(output, io::emit_graph(p.graph), out);
        err << kind << ": " << p.graph.vertex_count() << " vertices, " << p.graph.arc_count() << " arcs ("
            << p.count(ArcClass::synchronous) << " synchronous)\n";
      }
      return ok;
    }

    if (contract_cmd->parsed()) {
      Graph g = load(graph_path);
      std::set<VertexId> set;
      std::size_t start = 0;
      while (start <= set_text.size()) {
        std::size_t comma = set_text.find(',', start);
        std::string id = set_text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!id.empty())
          set.insert(id);
        if (comma == std::string::npos)
          break;
        start = comma + 1;
      }
      Graph result = contract(g, set, new_id);
      emit(output, io::emit_graph(result), out);
      return ok;
    }

    if (iso_cmd->parsed()) {
      Graph left = load(graph_path);
      Graph right = load(second_path);
      if (auto m = find_isomorphism(left, right)) {
        out << io::emit_mapping(*m);
        return ok;
      }
      out << "not isomorphic\n";
      return negative;
    }

    if (verify_cmd->parsed()) {
      Graph g = load(graph_path);
      VertexFamily rows = load_family(rows_path);
      VertexFamily cols = load_family(cols_path);
      DecompositionReport report = verify_decomposition(g, rows, cols);
      out << io::emit_report(report);
      return report.accepted() ? ok : negative;
    }

    if (decompose_cmd->parsed()) {
      Graph g = load(graph_path);
      SearchOptions options;
      if (const char* env = std::getenv("VRSP_MAX_LABELS"); env && *env)
        options.max_labels = parse_count(env, "VRSP_MAX_LABELS");
      if (!max_labels_text.empty())
        options.max_labels = parse_count(max_labels_text, "--max-labels");

      auto found = find_decompositions(g, options);
      if (!out_dir.empty())
        std::filesystem::create_directories(out_dir);
      const std::string stem = stem_of(graph_path);

      json doc;
      doc["graph"] = g.name();
      doc["labels"] = label_array(label_set(g));
      json list = json::array();
      for (std::size_t k = 0; k < found.size(); ++k) {
        const Decomposition& d = found[k];
        json entry;
        entry["left"] = label_array(d.left_labels);
        entry["right"] = label_array(d.right_labels);
        entry["m"] = d.report.row_count;
        entry["n"] = d.report.column_count;
        entry["factors"] = json::array({json::parse(io::emit_graph(d.first)), json::parse(io::emit_graph(d.second))});
        if (!out_dir.empty()) {
          json files = json::array();
          for (int f = 1; f <= 2; ++f) {
            auto path = std::filesystem::path(out_dir) / (stem + ".d" + std::to_string(k + 1) + ".g" + std::to_string(f) + ".json");
            io::write_file(path.string(), io::emit_graph(f == 1 ? d.first : d.second));
            files.push_back(path.string());
          }
          entry["files"] = std::move(files);
        }
        list.push_back(std::move(entry));
      }
      doc["decompositions"] = std::move(list);

      if (recursive) {
        json primes = json::array();
        auto factors = prime_factors(g, options);
        for (std::size_t k = 0; k < factors.size(); ++k) {
          primes.push_back(json::parse(io::emit_graph(factors[k])));
          if (!out_dir.empty()) {
            auto path = std::filesystem::path(out_dir) / (stem + ".p" + std::to_string(k + 1) + ".json");
            io::write_file(path.string(), io::emit_graph(factors[k]));
          }
        }
        doc["prime_factors"] = std::move(primes);
      }
      out << doc.dump(2) << "\n";
      return found.empty() ? negative : ok;
    }

    if (dot_cmd->parsed()) {
      emit(output, io::emit_dot(load(graph_path)), out);
      return ok;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    for (const std::string& d : e.details())
      err << "  " << d << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

} // namespace vrsp::cli
