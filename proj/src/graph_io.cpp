#include "lpa/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

namespace {

// Strips the comment part: '#' at line start or preceded by whitespace.
std::string strip_comment(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
      return line.substr(0, i);
  }
  return line;
}

struct Tok {
  std::string text;
  int column;  // 1-based
};

std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    toks.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
    i = j;
  }
  return toks;
}

}  // namespace

MultiGraph parse_multigraph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Bundle> bundles;

  auto expect = [&](bool cond, int col, const std::string& msg) {
    if (!cond) throw ParseError(lineno, col, msg);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (!saw_header) {
      expect(kw == "graph", toks[0].column, "expected 'graph <name>' header");
      expect(toks.size() == 2, toks[0].column, "expected 'graph <name>'");
      name = toks[1].text;
      saw_header = true;
      continue;
    }
    if (kw == "vertex") {
      expect(toks.size() == 2, toks[0].column, "expected 'vertex <id>'");
      vertices.push_back(toks[1].text);
    } else if (kw == "edge" || kw == "bundle") {
      bool is_bundle = kw == "bundle";
      std::size_t want = is_bundle ? 8 : 6;
      expect(toks.size() == want, toks[0].column,
             is_bundle ? "expected 'bundle <id> : <src> -> <rng> * <n|inf>'"
                       : "expected 'edge <id> : <src> -> <rng>'");
      expect(toks[2].text == ":", toks[2].column, "expected ':'");
      expect(toks[4].text == "->", toks[4].column, "expected '->'");
      if (is_bundle) {
        expect(toks[6].text == "*", toks[6].column, "expected '*'");
        std::optional<std::uint64_t> mult;
        if (toks[7].text != "inf") {
          try {
            std::size_t pos = 0;
            unsigned long long n = std::stoull(toks[7].text, &pos);
            if (pos != toks[7].text.size() || n == 0) throw std::exception();
            mult = n;
          } catch (...) {
            throw ParseError(lineno, toks[7].column,
                             "multiplicity must be a positive integer or 'inf'");
          }
        }
        bundles.push_back(Bundle{toks[1].text, toks[3].text, toks[5].text, mult});
      } else {
        edges.push_back(Edge{toks[1].text, toks[3].text, toks[5].text});
      }
    } else {
      throw ParseError(lineno, toks[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_header) throw ParseError(1, 1, "missing 'graph <name>' header");
  try {
    Graph g = Graph::make(name, std::move(vertices), std::move(edges));
    return MultiGraph::make(std::move(g), std::move(bundles));
  } catch (const Error& e) {
    throw ParseError(lineno, 1, e.what());
  }
}

Graph parse_graph(const std::string& text) {
  MultiGraph mg = parse_multigraph(text);
  if (!mg.bundles.empty())
    throw Error("graph '" + mg.base.name() +
                "' contains bundle lines; a plain graph was required");
  return std::move(mg.base);
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.name() << "\n";
  for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  for (const auto& e : g.edges())
    out << "edge " << e.id << " : " << e.src << " -> " << e.rng << "\n";
  return out.str();
}

std::string serialize(const MultiGraph& mg) {
  std::ostringstream out;
  out << serialize(mg.base);
  for (const auto& b : mg.bundles) {
    out << "bundle " << b.id << " : " << b.src << " -> " << b.rng << " * ";
    if (b.multiplicity)
      out << *b.multiplicity;
    else
      out << "inf";
    out << "\n";
  }
  return out.str();
}

MultiGraph load_multigraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_multigraph(buf.str());
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace lpa
