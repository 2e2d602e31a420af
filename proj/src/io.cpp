#include "vrsp/io.hpp"

#include "vrsp/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vrsp::io {

using json = nlohmann::ordered_json;

namespace {

const json& field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end())
    throw Error(ErrorCode::schema_error, where + ": missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_string())
    throw Error(ErrorCode::schema_error,
                where + "." + key + ": expected a string, found " + std::string(value.type_name()));
  return value.get<std::string>();
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

Graph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::schema_error, "document: expected an object, found " + std::string(doc.type_name()));

  RawGraph raw;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw Error(ErrorCode::schema_error, "name: expected a string");
    raw.name = doc["name"].get<std::string>();
  }

  const json& vertices = field(doc, "vertices", "document");
  if (!vertices.is_array())
    throw Error(ErrorCode::schema_error, "vertices: expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].is_string())
      throw Error(ErrorCode::schema_error, "vertices[" + std::to_string(i) + "]: expected a string");
    raw.vertices.push_back(vertices[i].get<std::string>());
  }

  const json& arcs = field(doc, "arcs", "document");
  if (!arcs.is_array())
    throw Error(ErrorCode::schema_error, "arcs: expected an array");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string where = "arcs[" + std::to_string(i) + "]";
    const json& a = arcs[i];
    if (!a.is_object())
      throw Error(ErrorCode::schema_error, where + ": expected an object");
    Arc arc;
    arc.id = string_field(a, "id", where);
    where += " ('" + arc.id + "')";
    arc.tail = string_field(a, "tail", where);
    arc.head = string_field(a, "head", where);
    arc.label.action = string_field(a, "action", where);
    std::string weight = string_field(a, "weight", where);
    try {
      arc.label.weight = Weight::parse(weight);
    } catch (const Error& e) {
      throw Error(ErrorCode::schema_error, where + ".weight: " + e.what());
    }
    raw.arcs.push_back(std::move(arc));
  }
  return Graph::create(std::move(raw));
}

std::string emit_graph(const Graph& g) {
  json doc;
  doc["name"] = g.name();
  doc["vertices"] = json::array();
  for (const VertexId& v : g.vertices())
    doc["vertices"].push_back(v);
  doc["arcs"] = json::array();
  for (const Arc& a : g.arcs()) {
    json arc;
    arc["id"] = a.id;
    arc["tail"] = a.tail;
    arc["head"] = a.head;
    arc["action"] = a.label.action;
    arc["weight"] = a.label.weight.to_string();
    doc["arcs"].push_back(std::move(arc));
  }
  return doc.dump(2) + "\n";
}

std::string emit_dot(const Graph& g) {
  std::ostringstream out;
  out << "digraph " << dot_quote(g.name()) << " {\n";
  for (const VertexId& v : g.vertices())
    out << "  " << dot_quote(v) << ";\n";

  std::vector<const Arc*> arcs;
  for (const Arc& a : g.arcs())
    arcs.push_back(&a);
  std::sort(arcs.begin(), arcs.end(), [](const Arc* a, const Arc* b) {
    return std::tie(a->tail, a->head, a->label, a->id) < std::tie(b->tail, b->head, b->label, b->id);
  });
  for (const Arc* a : arcs)
    out << "  " << dot_quote(a->tail) << " -> " << dot_quote(a->head) << " [label="
        << dot_quote(a->label.to_string()) << "];\n";
  out << "}\n";
  return out.str();
}

VertexFamily parse_family(std::string_view text) {
  std::vector<std::set<VertexId>> sets;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body.front() == '#')
      continue;
    std::set<VertexId> set;
    std::istringstream items(body);
    for (std::string item; std::getline(items, item, ',');) {
      std::string id = trim(item);
      if (id.empty())
        throw Error(ErrorCode::schema_error, "family line " + std::to_string(line_no) + ": empty vertex id");
      if (!set.insert(id).second)
        throw Error(ErrorCode::schema_error,
                    "family line " + std::to_string(line_no) + ": vertex '" + id + "' listed twice");
    }
    if (body.back() == ',')
      throw Error(ErrorCode::schema_error, "family line " + std::to_string(line_no) + ": trailing comma");
    sets.push_back(std::move(set));
  }
  return VertexFamily(std::move(sets));
}

std::string emit_family(const VertexFamily& family) {
  std::string out;
  for (const auto& s : family.sets()) {
    bool first = true;
    for (const VertexId& v : s) {
      if (!first)
        out += ",";
      out += v;
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string emit_report(const DecompositionReport& report) {
  json doc;
  doc["accepted"] = report.accepted();
  doc["m"] = report.row_count;
  doc["n"] = report.column_count;
  json conditions = json::object();
  for (const auto& [c, r] : report.conditions) {
    json entry;
    entry["status"] = std::string(to_string(r.status));
    entry["witness"] = r.witness;
    conditions[std::string(to_string(c))] = std::move(entry);
  }
  doc["conditions"] = std::move(conditions);
  json failed = json::array();
  for (Condition c : report.failed())
    failed.push_back(std::string(to_string(c)));
  doc["failed"] = std::move(failed);
  if (report.factors) {
    doc["factors"] = json::array({json::parse(emit_graph(report.factors->first)),
                                  json::parse(emit_graph(report.factors->second))});
  }
  return doc.dump(2) + "\n";
}

std::string emit_mapping(const IsoMapping& mapping) {
  std::string out;
  for (const auto& [from, to] : mapping.pairs)
    out += from + " -> " + to + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
  out << contents;
  if (!out)
    throw Error(ErrorCode::parse_error, "failed writing '" + path + "'");
}

} // namespace vrsp::io
