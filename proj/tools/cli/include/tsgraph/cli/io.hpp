#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsgraph/graph.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph::cli {

using Json = nlohmann::ordered_json;

/// Malformed input document. Syntax errors carry a 1-based line and column;
/// structural errors carry the offending JSON path instead (line 0).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses JSON text; `source` names the input in messages.
Json parse_json(const std::string& text, const std::string& source);

struct TemplateDoc {
  std::vector<std::string> names;
  std::vector<int> observed;  // sorted variable indices
  TsDagTemplate tmpl;
};

struct GraphDoc {
  std::vector<std::string> names;
  WindowGraph graph;
};

bool is_template(const Json& doc);

TemplateDoc template_from_json(const Json& doc);
Json template_to_json(const TemplateDoc& doc);

/// Edge types are accepted in either endpoint order and normalized.
GraphDoc graph_from_json(const Json& doc);
Json graph_to_json(const GraphDoc& doc);

/// Edge list in the graph document format.
Json edges_to_json(const std::vector<Edge>& edges, const std::vector<std::string>& names);

/// Indented JSON where any array or object that fits in 80 columns stays
/// on one line, so each edge occupies a single line.
std::string format_json(const Json& j);

/// Default names X0, X1, ...
std::vector<std::string> default_names(int n);

}  // namespace tsgraph::cli
