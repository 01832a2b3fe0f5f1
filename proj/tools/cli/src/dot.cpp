#include "tsgraph/cli/dot.hpp"

#include <map>
#include <sstream>

namespace tsgraph::cli {

namespace {

const char* arrow_shape(Mark m) {
  switch (m) {
    case Mark::Tail: return "none";
    case Mark::Head: return "normal";
    case Mark::Circle: return "odot";
  }
  return "none";
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string time_label(int t) {
  if (t == 0) return "t";
  return "t" + std::to_string(t);
}

}  // namespace

std::string to_dot(const WindowGraph& g, const std::vector<std::string>& names, const std::string& title) {
  auto node_id = [&](Vertex v) {
    return quote(names[static_cast<std::size_t>(v.var)] + "@" + std::to_string(v.time));
  };
  std::ostringstream os;
  os << "digraph " << quote(title) << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse];\n";
  for (int t : g.times()) {
    os << "  { rank=same;";
    for (int i = 0; i < g.n_vars(); ++i) os << ' ' << node_id({i, t}) << ';';
    os << " }\n";
  }
  for (int t : g.times()) {
    for (int i = 0; i < g.n_vars(); ++i) {
      os << "  " << node_id({i, t}) << " [label="
         << quote(names[static_cast<std::size_t>(i)] + " " + time_label(t)) << "];\n";
    }
  }
  for (const Edge& e : g.edges()) {
    os << "  " << node_id(e.a) << " -> " << node_id(e.b) << " [dir=both, arrowtail=" << arrow_shape(e.at_a)
       << ", arrowhead=" << arrow_shape(e.at_b) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tsgraph::cli
