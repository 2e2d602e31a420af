#pragma once

#include "vrsp/decomposition.hpp"
#include "vrsp/graph.hpp"
#include "vrsp/isomorphism.hpp"
#include "vrsp/quotient.hpp"

#include <string>
#include <string_view>

namespace vrsp::io {

/// Reads a graph document:
///   {"name": ..., "vertices": [ids...],
///    "arcs": [{"id","tail","head","action","weight"}...]}
/// `weight` is a string token ("1", "3/2"). Throws Error(parse_error) for
/// malformed JSON (with line/column), Error(schema_error) naming the
/// offending field, and Error(invalid_graph) for invariant violations.
Graph parse_graph(std::string_view text);

/// Canonical form: fixed field order, sorted vertices and arcs, two-space
/// indent, trailing newline.
std::string emit_graph(const Graph& g);

/// Graphviz digraph, vertices and arcs in sorted order.
std::string emit_dot(const Graph& g);

/// One vertex set per line, ids separated by commas. Blank lines and lines
/// starting with '#' are skipped.
VertexFamily parse_family(std::string_view text);
std::string emit_family(const VertexFamily& family);

std::string emit_report(const DecompositionReport& report);
std::string emit_mapping(const IsoMapping& mapping);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace vrsp::io
