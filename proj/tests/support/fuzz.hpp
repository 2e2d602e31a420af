#pragma once

// Generators of graph documents that are malformed by construction: every
// case must be rejected by the parser.

#include "vrsp/io.hpp"

#include "testing.hpp"

#include <json.hpp>

#include <string>

namespace vrsp::testing {

struct FuzzCase {
  std::string category;
  std::string text;
};

inline FuzzCase malformed_document(Rng& rng, const std::string& valid) {
  using json = nlohmann::json;
  const json base = json::parse(valid);
  auto pick_arc = [&](json& doc) -> json& { return doc["arcs"][uniform(rng, 0, doc["arcs"].size() - 1)]; };

  switch (uniform(rng, 0, 13)) {
  case 0: {
    std::string bytes(uniform(rng, 0, 64), '\0');
    for (char& c : bytes)
      c = static_cast<char>(uniform(rng, 0, 255));
    return {"random-bytes", bytes};
  }
  case 1: {
    std::size_t last = valid.rfind('}');
    return {"truncated", valid.substr(0, uniform(rng, 0, last - 1))};
  }
  case 2: {
    json doc = base;
    doc.erase(uniform(rng, 0, 1) ? "vertices" : "arcs");
    return {"missing-top-field", doc.dump()};
  }
  case 3: {
    json doc = base;
    static const char* fields[] = {"id", "tail", "head", "action", "weight"};
    pick_arc(doc).erase(fields[uniform(rng, 0, 4)]);
    return {"missing-arc-field", doc.dump()};
  }
  case 4: {
    json doc = base;
    static const char* fields[] = {"id", "tail", "head", "action", "weight"};
    json& arc = pick_arc(doc);
    const char* f = fields[uniform(rng, 0, 4)];
    switch (uniform(rng, 0, 3)) {
    case 0: arc[f] = 7; break;
    case 1: arc[f] = nullptr; break;
    case 2: arc[f] = json::array(); break;
    default: arc[f] = json::object(); break;
    }
    return {"wrong-type", doc.dump()};
  }
  case 5: {
    json doc = base;
    static const char* weights[] = {"", "1.5", "1/0", "one", "--1", "1/2/3", "99999999999999999999", " 1", "0x10"};
    pick_arc(doc)["weight"] = weights[uniform(rng, 0, 8)];
    return {"bad-weight", doc.dump()};
  }
  case 6: {
    json doc = base;
    pick_arc(doc)["action"] = "";
    return {"empty-action", doc.dump()};
  }
  case 7: {
    json doc = base;
    pick_arc(doc)[uniform(rng, 0, 1) ? "head" : "tail"] = "ghost-" + std::to_string(uniform(rng, 0, 999));
    return {"dangling", doc.dump()};
  }
  case 8: {
    json doc = base;
    doc["vertices"].push_back(doc["vertices"][uniform(rng, 0, doc["vertices"].size() - 1)]);
    return {"duplicate-vertex", doc.dump()};
  }
  case 9: {
    json doc = base;
    doc["arcs"].push_back(pick_arc(doc));
    return {"duplicate-arc", doc.dump()};
  }
  case 10: {
    json doc = base;
    json& arc = pick_arc(doc);
    arc["head"] = arc["tail"];
    return {"self-loop", doc.dump()};
  }
  case 11: {
    json doc = base;
    json back = pick_arc(doc);
    std::swap(back["tail"], back["head"]);
    back["id"] = "reverse-" + back["id"].get<std::string>();
    doc["arcs"].push_back(back);
    return {"cycle", doc.dump()};
  }
  case 12: {
    std::string deep(uniform(rng, 1, 5000), '[');
    return {"deep-nesting", deep};
  }
  default: {
    json doc = base;
    switch (uniform(rng, 0, 2)) {
    case 0: doc = json::array({doc}); break;
    case 1: doc["vertices"] = "u1"; break;
    default: doc["arcs"] = json::object(); break;
    }
    return {"wrong-shape", doc.dump()};
  }
  }
}

} // namespace vrsp::testing
