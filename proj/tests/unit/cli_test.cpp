#include <gtest/gtest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tsgraph/cli/app.hpp"
#include "tsgraph/cli/dot.hpp"
#include "tsgraph/cli/io.hpp"
#include "tsgraph/marginal.hpp"

namespace tsgraph {
namespace {

namespace fs = std::filesystem;
using cli::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFiles {
 public:
  TempFiles() : dir_(fs::temp_directory_path() / ("tsgraph_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()))) {
    fs::create_directories(dir_);
  }
  ~TempFiles() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

const char* kFixtureA = R"({
  "variables": ["O1", "O2"],
  "order": 1,
  "edges": [
    {"from": ["O1", -1], "to": ["O1", 0]},
    {"from": ["O1", -1], "to": ["O2", 0]}
  ]
})";

// Recursive-descent check of the DOT language subset: graph, statement
// lists, attribute statements, node and edge statements, and anonymous
// subgraphs.
class DotChecker {
 public:
  explicit DotChecker(const std::string& text) { tokenize(text); }

  bool valid() {
    if (!ok_) return false;
    if (!accept_word("digraph")) return false;
    if (peek_id()) next();
    if (!accept("{") || !stmt_list()) return false;
    return accept("}") && pos_ == tokens_.size();
  }

 private:
  struct Token {
    bool id;
    std::string text;
  };

  void tokenize(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '"') {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '"') j += s[j] == '\\' ? 2 : 1;
        if (j >= s.size()) {
          ok_ = false;
          return;
        }
        tokens_.push_back({true, s.substr(i, j - i + 1)});
        i = j + 1;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
          tokens_.push_back({false, "->"});
          i += 2;
          continue;
        }
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.' ||
                                s[j] == '-')) {
          ++j;
        }
        tokens_.push_back({true, s.substr(i, j - i)});
        i = j;
      } else if (std::string("{}[];=,").find(c) != std::string::npos) {
        tokens_.push_back({false, std::string(1, c)});
        ++i;
      } else {
        ok_ = false;
        return;
      }
    }
  }

  bool peek(const char* t) const { return pos_ < tokens_.size() && !tokens_[pos_].id && tokens_[pos_].text == t; }
  bool peek_id() const { return pos_ < tokens_.size() && tokens_[pos_].id; }
  void next() { ++pos_; }
  bool accept(const char* t) {
    if (!peek(t)) return false;
    next();
    return true;
  }
  bool accept_word(const char* w) {
    if (!peek_id() || tokens_[pos_].text != w) return false;
    next();
    return true;
  }

  bool attr_list() {
    while (accept("[")) {
      while (peek_id()) {
        next();
        if (!accept("=") || !peek_id()) return false;
        next();
        if (!accept(",")) accept(";");
      }
      if (!accept("]")) return false;
    }
    return true;
  }

  bool stmt() {
    if (peek("{")) {
      next();
      return stmt_list() && accept("}");
    }
    if (!peek_id()) return false;
    const std::string head = tokens_[pos_].text;
    next();
    if ((head == "node" || head == "edge" || head == "graph") && peek("[")) return attr_list();
    if (accept("=")) {
      if (!peek_id()) return false;
      next();
      return true;
    }
    while (accept("->")) {
      if (!peek_id()) return false;
      next();
    }
    return attr_list();
  }

  bool stmt_list() {
    while (!peek("}")) {
      if (pos_ >= tokens_.size() || !stmt()) return false;
      accept(";");
    }
    return true;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool ok_ = true;
};

TEST(DotChecker, RejectsBrokenDocuments) {
  EXPECT_TRUE(DotChecker("digraph G { a -> b [x=y]; }").valid());
  EXPECT_FALSE(DotChecker("digraph G { a -> ; }").valid());
  EXPECT_FALSE(DotChecker("digraph G { a -> b").valid());
  EXPECT_FALSE(DotChecker("graph G { }").valid());
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  const Result r = run({"bogus"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("unknown subcommand"), std::string::npos);
  EXPECT_EQ(run({"marginalize"}).code, cli::kUsage);
  EXPECT_EQ(run({"marginalize", "/nonexistent/input.json"}).code, cli::kUsage);
  EXPECT_EQ(run({"random", "--format", "yaml"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(ExitCodes, ParseErrorsCarryLineAndColumn) {
  TempFiles files;
  const std::string path = files.write("bad.json", "{\n  \"variables\": [\"A\"],\n  \"order\": 0,,\n}");
  const Result r = run({"marginalize", path});
  EXPECT_EQ(r.code, cli::kParse);
  EXPECT_NE(r.err.find(path + ":3:"), std::string::npos) << r.err;
  EXPECT_EQ(r.err.find("[json.exception"), std::string::npos) << r.err;
}

TEST(ExitCodes, SchemaErrorsNameThePath) {
  TempFiles files;
  const std::string path = files.write("schema.json", R"({"variables": ["A"], "order": 0, "edges": [{"from": ["B", 0], "to": ["A", 0]}]})");
  const Result r = run({"marginalize", path});
  EXPECT_EQ(r.code, cli::kParse);
  EXPECT_NE(r.err.find("$.edges[0].from"), std::string::npos) << r.err;
}

TEST(ExitCodes, SemanticAndBudgetErrors) {
  TempFiles files;
  const std::string cyclic = files.write("cyclic.json", R"({"variables": ["A", "B", "C"], "times": [0], "edges": [
    {"a": ["A", 0], "b": ["B", 0], "type": "-->"},
    {"a": ["B", 0], "b": ["C", 0], "type": "-->"},
    {"a": ["C", 0], "b": ["A", 0], "type": "-->"}]})");
  EXPECT_EQ(run({"check", cyclic, "--mode", "dmag"}).code, cli::kSemantic);
  const Result mixed = run({"check", cyclic});
  EXPECT_EQ(mixed.code, cli::kOk);
  EXPECT_NE(mixed.out.find("directed cycle"), std::string::npos);

  const std::string a = files.write("a.json", kFixtureA);
  EXPECT_EQ(run({"limit", a, "--tau-max", "2"}).code, cli::kBudget);
  EXPECT_EQ(run({"limit", a, "--tau-max", "2", "--budget", "20"}).code, cli::kOk);
  EXPECT_EQ(run({"limit", a, "--tau-max", "2", "--dmag-only"}).code, cli::kOk);
  EXPECT_EQ(run({"compare-windows", a, "--tau-max", "2", "--tau-tilde", "1"}).code, cli::kSemantic);
}

TEST(Commands, MarginalizeThenCheckAndCanonical) {
  TempFiles files;
  const std::string a = files.write("a.json", kFixtureA);
  const Result m = run({"marginalize", a, "--tau-max", "2"});
  ASSERT_EQ(m.code, cli::kOk) << m.err;
  const std::string mpath = files.write("m.json", m.out);
  const Result c = run({"check", mpath});
  ASSERT_EQ(c.code, cli::kOk);
  EXPECT_TRUE(Json::parse(c.out)["ts_dmag"].get<bool>());
  const Result t = run({"canonical", mpath});
  ASSERT_EQ(t.code, cli::kOk);
  const auto doc = cli::template_from_json(Json::parse(t.out));
  EXPECT_EQ(doc.tmpl, TsDagTemplate(2, {{0, 0, 1}, {0, 1, 1}}));
}

TEST(Commands, DpagAcceptsTemplatesAndGraphs) {
  TempFiles files;
  const std::string a = files.write("a.json", kFixtureA);
  const Result from_template = run({"dpag", a, "--tau-max", "2", "--knowledge", "b_to"});
  ASSERT_EQ(from_template.code, cli::kOk) << from_template.err;
  const std::string m = files.write("m.json", run({"marginalize", a, "--tau-max", "2"}).out);
  const Result from_graph = run({"dpag", m, "--knowledge", "b_to"});
  ASSERT_EQ(from_graph.code, cli::kOk);
  EXPECT_EQ(Json::parse(from_template.out), Json::parse(from_graph.out));
  EXPECT_EQ(Json::parse(from_graph.out)["class_size"], 3);
  EXPECT_EQ(run({"dpag", m, "--knowledge", "b_q"}).code, cli::kUsage);
}

TEST(Commands, RandomIsDeterministic) {
  const Result a = run({"random", "--seed", "9", "--vars", "3", "--latent", "1"});
  const Result b = run({"random", "--seed", "9", "--vars", "3", "--latent", "1"});
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["observed"].size(), 2u);
}

TEST(Commands, DotOutputIsWellFormed) {
  TempFiles files;
  const std::string a = files.write("a.json", kFixtureA);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"render", a, "--tau-max", "2"},
           {"marginalize", a, "--tau-max", "2", "--format", "dot"},
           {"dpag", a, "--tau-max", "2", "--knowledge", "none", "--format", "dot"}}) {
    const Result r = run(args);
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(DotChecker(r.out).valid()) << r.out;
  }
}

TEST(JsonRoundTrip, Templates) {
  testing::Rng rng(173);
  for (int k = 0; k < 200; ++k) {
    const int n = rng.uniform(1, 4);
    cli::TemplateDoc doc;
    doc.names = cli::default_names(n);
    doc.tmpl = random_ts_dag(n, rng.uniform(0, 2), rng.real(0.1, 0.6), rng.next());
    for (int i = 0; i < n; ++i) {
      if (i == 0 || rng.coin(0.7)) doc.observed.push_back(i);
    }
    const Json j = cli::template_to_json(doc);
    const cli::TemplateDoc back = cli::template_from_json(cli::parse_json(cli::format_json(j), "mem"));
    EXPECT_EQ(back.tmpl, doc.tmpl);
    EXPECT_EQ(back.names, doc.names);
    EXPECT_EQ(back.observed, doc.observed);
  }
}

TEST(JsonRoundTrip, GraphsWithEveryMark) {
  testing::Rng rng(179);
  for (const auto& in : testing::make_corpus(60, 181)) {
    cli::GraphDoc doc;
    doc.graph = ts_dmag(in.tmpl, in.scheme);
    doc.names = cli::default_names(doc.graph.n_vars());
    // Turn some marks into circles to exercise every edge type.
    for (const Edge& e : doc.graph.edges()) {
      if (rng.coin(0.3)) doc.graph.set_edge(e.a, e.b, Mark::Circle, rng.coin(0.5) ? Mark::Head : Mark::Circle);
    }
    const Json j = cli::graph_to_json(doc);
    const cli::GraphDoc back = cli::graph_from_json(cli::parse_json(cli::format_json(j), "mem"));
    EXPECT_EQ(back.graph, doc.graph);
    EXPECT_TRUE(DotChecker(cli::to_dot(doc.graph, doc.names)).valid());
  }
}

TEST(FormatJson, ShortStructuresStayOnOneLine) {
  const Json j = Json::parse(R"({"a": [1, 2], "b": {"c": "d"}})");
  EXPECT_EQ(cli::format_json(j), R"({"a":[1,2],"b":{"c":"d"}})");
}

}  // namespace
}  // namespace tsgraph
