#include "tsgraph/cli/io.hpp"

#include <algorithm>
#include <map>

#include "tsgraph/error.hpp"

namespace tsgraph::cli {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

int require_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<int>();
}

std::vector<std::string> read_names(const Json& doc, const std::string& path) {
  const Json& vars = require(doc, "variables", path);
  if (!vars.is_array() || vars.empty()) schema_error(path + ".variables", "expected a non-empty array");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!vars[k].is_string()) schema_error(path + ".variables[" + std::to_string(k) + "]", "expected a string");
    names.push_back(vars[k].get<std::string>());
  }
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    schema_error(path + ".variables", "duplicate variable name");
  }
  return names;
}

/// A variable given by name or by index.
int resolve_var(const Json& v, const std::vector<std::string>& names, const std::string& path) {
  if (v.is_string()) {
    auto it = std::find(names.begin(), names.end(), v.get<std::string>());
    if (it == names.end()) schema_error(path, "unknown variable \"" + v.get<std::string>() + "\"");
    return static_cast<int>(it - names.begin());
  }
  const int idx = require_int(v, path);
  if (idx < 0 || idx >= static_cast<int>(names.size())) schema_error(path, "variable index out of range");
  return idx;
}

Vertex read_vertex(const Json& v, const std::vector<std::string>& names, const std::string& path) {
  if (!v.is_array() || v.size() != 2) schema_error(path, "expected [variable, offset]");
  return {resolve_var(v[0], names, path + "[0]"), require_int(v[1], path + "[1]")};
}

Mark left_mark(char c) {
  switch (c) {
    case '-': return Mark::Tail;
    case '<': return Mark::Head;
    case 'o': return Mark::Circle;
  }
  throw std::invalid_argument("bad mark");
}

Mark right_mark(char c) {
  switch (c) {
    case '-': return Mark::Tail;
    case '>': return Mark::Head;
    case 'o': return Mark::Circle;
  }
  throw std::invalid_argument("bad mark");
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json vertex_json(Vertex v, const std::vector<std::string>& names) {
  return Json::array({names[static_cast<std::size_t>(v.var)], v.time});
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    // Drop the library's own "[json.exception...] parse error at line L,
    // column C: " prefix; the location is reported in front.
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) {
      if (auto colon = what.find(": ", pos); colon != std::string::npos) what = what.substr(colon + 2);
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what, line, column);
  }
}

namespace {

void format_into(const Json& j, int indent, std::string& out) {
  const std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || indent + flat.size() <= 80) {
    out += flat;
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    format_into(*it, indent + 2, out);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string format_json(const Json& j) {
  std::string out;
  format_into(j, 0, out);
  return out;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back("X" + std::to_string(k));
  return out;
}

bool is_template(const Json& doc) { return doc.is_object() && doc.contains("order"); }

TemplateDoc template_from_json(const Json& doc) {
  TemplateDoc out;
  out.names = read_names(doc, "$");
  const int n = static_cast<int>(out.names.size());
  if (auto it = doc.find("observed"); it != doc.end()) {
    if (!it->is_array()) schema_error("$.observed", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      out.observed.push_back(resolve_var((*it)[k], out.names, "$.observed[" + std::to_string(k) + "]"));
    }
    std::sort(out.observed.begin(), out.observed.end());
    if (std::adjacent_find(out.observed.begin(), out.observed.end()) != out.observed.end()) {
      schema_error("$.observed", "duplicate observed variable");
    }
  } else {
    for (int k = 0; k < n; ++k) out.observed.push_back(k);
  }
  const int order = require_int(require(doc, "order", "$"), "$.order");
  const Json& edges = require(doc, "edges", "$");
  if (!edges.is_array()) schema_error("$.edges", "expected an array");
  std::vector<LaggedEdge> lagged;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "$.edges[" + std::to_string(k) + "]";
    const Vertex from = read_vertex(require(edges[k], "from", path), out.names, path + ".from");
    const Vertex to = read_vertex(require(edges[k], "to", path), out.names, path + ".to");
    lagged.push_back({from.var, to.var, to.time - from.time});
  }
  out.tmpl = TsDagTemplate(n, order, std::move(lagged));
  return out;
}

Json template_to_json(const TemplateDoc& doc) {
  Json out;
  out["variables"] = doc.names;
  Json observed = Json::array();
  for (int v : doc.observed) observed.push_back(doc.names[static_cast<std::size_t>(v)]);
  out["observed"] = observed;
  out["order"] = doc.tmpl.order();
  Json edges = Json::array();
  for (const LaggedEdge& e : doc.tmpl.edges()) {
    edges.push_back({{"from", Json::array({doc.names[static_cast<std::size_t>(e.from)], -e.lag})},
                     {"to", Json::array({doc.names[static_cast<std::size_t>(e.to)], 0})}});
  }
  out["edges"] = edges;
  return out;
}

GraphDoc graph_from_json(const Json& doc) {
  GraphDoc out;
  out.names = read_names(doc, "$");
  const Json& times = require(doc, "times", "$");
  if (!times.is_array() || times.empty()) schema_error("$.times", "expected a non-empty array");
  std::vector<int> ts;
  for (std::size_t k = 0; k < times.size(); ++k) ts.push_back(require_int(times[k], "$.times[" + std::to_string(k) + "]"));
  std::sort(ts.begin(), ts.end());
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) schema_error("$.times", "duplicate time offset");
  out.graph = WindowGraph(static_cast<int>(out.names.size()), ts);

  const Json& edges = require(doc, "edges", "$");
  if (!edges.is_array()) schema_error("$.edges", "expected an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "$.edges[" + std::to_string(k) + "]";
    const Vertex a = read_vertex(require(edges[k], "a", path), out.names, path + ".a");
    const Vertex b = read_vertex(require(edges[k], "b", path), out.names, path + ".b");
    const Json& type = require(edges[k], "type", path);
    if (!type.is_string() || type.get<std::string>().size() != 3 || type.get<std::string>()[1] != '-') {
      schema_error(path + ".type", "expected one of -->, <--, <->, o->, <-o, o-o");
    }
    const std::string t = type.get<std::string>();
    Mark at_a, at_b;
    try {
      at_a = left_mark(t[0]);
      at_b = right_mark(t[2]);
    } catch (const std::invalid_argument&) {
      schema_error(path + ".type", "unknown edge type \"" + t + "\"");
    }
    if (!out.graph.contains(a)) schema_error(path + ".a", "vertex outside the declared time set");
    if (!out.graph.contains(b)) schema_error(path + ".b", "vertex outside the declared time set");
    out.graph.add_edge(a, b, at_a, at_b);
  }
  return out;
}

Json edges_to_json(const std::vector<Edge>& edges, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const Edge& e : edges) {
    out.push_back({{"a", vertex_json(e.a, names)}, {"b", vertex_json(e.b, names)}, {"type", arrow(e.at_a, e.at_b)}});
  }
  return out;
}

Json graph_to_json(const GraphDoc& doc) {
  Json out;
  out["variables"] = doc.names;
  out["times"] = doc.graph.times();
  out["edges"] = edges_to_json(doc.graph.edges(), doc.names);
  return out;
}

}  // namespace tsgraph::cli
