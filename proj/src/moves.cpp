#include "lpa/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lpa/graph_io.hpp"

namespace lpa {

void DelayVector::validate(const Graph& g) const {
  for (const auto& v : g.vertices())
    if (!vertex_delay.count(v))
      throw Error("delay vector missing vertex '" + v + "'");
  for (const auto& e : g.edges()) {
    auto it = edge_delay.find(e.id);
    if (it == edge_delay.end())
      throw Error("delay vector missing edge '" + e.id + "'");
    if (it->second > vertex_delay.at(e.src))
      throw Error("delay vector violates d(e) <= d(s(e)) at edge '" + e.id +
                  "'");
  }
}

DelayVector DelayVector::zero(const Graph& g) {
  DelayVector d;
  for (const auto& v : g.vertices()) d.vertex_delay[v] = 0;
  for (const auto& e : g.edges()) d.edge_delay[e.id] = 0;
  return d;
}

DelayVector DelayVector::parse(const std::string& text) {
  DelayVector d;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    // same comment convention as the graph format
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (raw[i] == '#' && (i == 0 || raw[i - 1] == ' ' || raw[i - 1] == '\t')) {
        raw = raw.substr(0, i);
        break;
      }
    std::istringstream ls(raw);
    std::string kind, id;
    long long n;
    if (!(ls >> kind)) continue;
    if (!(ls >> id >> n) || n < 0)
      throw ParseError(lineno, 1, "expected '<vertex|edge> <id> <n>'");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, 1, "trailing tokens");
    if (kind == "vertex")
      d.vertex_delay[id] = static_cast<std::uint64_t>(n);
    else if (kind == "edge")
      d.edge_delay[id] = static_cast<std::uint64_t>(n);
    else
      throw ParseError(lineno, 1, "unknown directive '" + kind + "'");
  }
  return d;
}

std::string DelayVector::serialize() const {
  std::ostringstream out;
  for (const auto& [v, n] : vertex_delay) out << "vertex " << v << " " << n << "\n";
  for (const auto& [e, n] : edge_delay) out << "edge " << e << " " << n << "\n";
  return out.str();
}

InDelayResult in_delay(const Graph& F, const DelayVector& d) {
  d.validate(F);
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::string> copy;
  auto level = [](const std::string& v, std::uint64_t j) {
    return v + "#" + std::to_string(j);
  };
  for (const auto& v : F.vertices()) {
    std::uint64_t dv = d.vertex_delay.at(v);
    for (std::uint64_t j = 0; j <= dv; ++j) vertices.push_back(level(v, j));
    for (std::uint64_t j = 1; j <= dv; ++j)
      edges.push_back(Edge{v + "#e" + std::to_string(j), level(v, j - 1),
                           level(v, j)});
    copy[v] = level(v, 0);
  }
  for (const auto& e : F.edges())
    edges.push_back(
        Edge{e.id, level(e.src, d.edge_delay.at(e.id)), level(e.rng, 0)});
  GraphRef g = make_graph(F.name().empty() ? "delay" : F.name() + ".delay",
                          std::move(vertices), std::move(edges));
  return InDelayResult{std::move(g), std::move(copy)};
}

DesingResult desingularise_truncated(const MultiGraph& F, std::uint64_t depth) {
  if (depth < 1) throw Error("desingularisation depth must be >= 1");
  std::vector<std::string> vertices = F.base.vertices();
  std::vector<Edge> edges = F.base.edges();
  for (const auto& b : F.bundles) {
    if (b.multiplicity) {
      for (std::uint64_t i = 0; i < *b.multiplicity; ++i)
        edges.push_back(Edge{b.id + "_e" + std::to_string(i), b.src, b.rng});
      continue;
    }
    // Infinite receiver: direct edge, then a tail of new vertices fanned
    // from the source, each chained one step closer to the target. The
    // head at a source is deleted, so nothing else is added.
    edges.push_back(Edge{b.id + "_e0", b.src, b.rng});
    std::string prev = b.rng;
    for (std::uint64_t i = 1; i < depth; ++i) {
      std::string vi = b.id + "_" + std::to_string(i);
      vertices.push_back(vi);
      edges.push_back(Edge{b.id + "_e" + std::to_string(i), b.src, vi});
      edges.push_back(Edge{b.id + "_f" + std::to_string(i), vi, prev});
      prev = vi;
    }
  }
  GraphRef g =
      make_graph(F.base.name().empty() ? "desing" : F.base.name() + ".desing",
                 std::move(vertices), std::move(edges));
  return DesingResult{std::move(g)};
}

GraphRef truncate_multigraph(const MultiGraph& F, std::uint64_t depth) {
  if (depth < 1) throw Error("truncation depth must be >= 1");
  std::vector<Edge> edges = F.base.edges();
  for (const auto& b : F.bundles) {
    std::uint64_t n = b.multiplicity ? std::min(*b.multiplicity, depth) : depth;
    for (std::uint64_t i = 0; i < n; ++i)
      edges.push_back(Edge{b.id + "_e" + std::to_string(i), b.src, b.rng});
  }
  return make_graph(F.base.name() + ".trunc", F.base.vertices(),
                    std::move(edges));
}

CollapseResult collapse_segment(GraphRef E, const std::vector<std::string>& seg,
                                Ring ring) {
  std::set<std::string> segset(seg.begin(), seg.end());
  for (const auto& v : seg)
    if (!E->has_vertex(v)) throw Error("unknown vertex '" + v + "'");
  for (const auto& v : singular_vertices(*E))
    if (segset.count(v))
      throw Error("collapse segment contains singular vertex '" + v + "'");
  std::vector<std::string> segv(segset.begin(), segset.end());
  AcyclicResult ac = is_acyclic(*E, segv);
  if (!ac.acyclic)
    throw Error("collapse segment is not acyclic: cycle " +
                path_to_string(*ac.witness));
  std::ostringstream diag;
  for (const auto& v : segv)
    diag << "segment vertex " << v << ": in=" << E->in_edges(v).size()
         << " out=" << E->out_edges(v).size() << "\n";
  std::vector<std::string> G0;
  for (const auto& v : E->vertices())
    if (!segset.count(v)) G0.push_back(v);
  return CollapseResult{contract(std::move(E), G0, ring), diag.str()};
}

// ---------------------------------------------------------------------------
// Fixtures

FixtureName parse_fixture_name(const std::string& s) {
  if (s == "EX51") return FixtureName::EX51;
  if (s == "EX52") return FixtureName::EX52;
  if (s == "EX53") return FixtureName::EX53;
  throw Error("unknown fixture '" + s + "' (expected EX51|EX52|EX53)");
}

namespace {

struct FigureEdge {
  std::string id;   // figure-style edge name
  std::string src;  // figure-style endpoints
  std::string rng;
  std::vector<std::string> witness;  // E-edge ids, paper order
};

Fixture assemble(std::string name, GraphRef E, std::vector<std::string> G0,
                 std::vector<std::string> figure_vertices,
                 std::map<std::string, std::string> vertex_rename,
                 const std::vector<FigureEdge>& fig_edges) {
  Fixture fx;
  fx.name = std::move(name);
  fx.E = std::move(E);
  fx.G0 = std::move(G0);
  std::sort(fx.G0.begin(), fx.G0.end());

  std::vector<Edge> fedges;
  std::vector<Edge> eedges;
  std::map<std::string, std::string> inverse_vertex;
  for (const auto& [g0v, figv] : vertex_rename) inverse_vertex[figv] = g0v;
  fx.rename = std::move(vertex_rename);
  for (const auto& fe : fig_edges) {
    fedges.push_back(Edge{fe.id, fe.src, fe.rng});
    Path beta = Path::make(*fx.E, fe.witness);
    std::string cid = "c_" + path_to_string(beta);
    eedges.push_back(Edge{cid, inverse_vertex.at(fe.src), inverse_vertex.at(fe.rng)});
    fx.expected_witness.emplace(cid, beta);
    fx.rename.emplace(cid, fe.id);
  }
  fx.figure = make_graph(fx.name + ".fig", figure_vertices, std::move(fedges));
  fx.expected = make_graph(fx.E->name() + ".cg", fx.G0, std::move(eedges));
  return fx;
}

Fixture fixture_ex51(std::uint64_t depth) {
  // Collapsible-path graph: tail u_n -> ... -> u_1 -> v_0 fed by the v_i,
  // with v_0 -> v_1 closing the loop back into the tail.
  std::uint64_t n = depth;
  std::vector<std::string> vs;
  std::vector<Edge> es;
  auto u = [](std::uint64_t i) { return "u" + std::to_string(i); };
  auto v = [](std::uint64_t i) { return "v" + std::to_string(i); };
  for (std::uint64_t i = 0; i <= n; ++i) vs.push_back(v(i));
  for (std::uint64_t i = 1; i <= n; ++i) vs.push_back(u(i));
  es.push_back(Edge{"x1", u(1), v(0)});
  for (std::uint64_t i = 2; i <= n; ++i)
    es.push_back(Edge{"x" + std::to_string(i), u(i), u(i - 1)});
  es.push_back(Edge{"y0", v(0), v(1)});
  es.push_back(Edge{"a1", v(1), u(1)});
  for (std::uint64_t i = 2; i <= n; ++i)
    es.push_back(Edge{"a" + std::to_string(i), v(i), u(i)});
  for (std::uint64_t i = 3; i <= n; ++i)
    es.push_back(Edge{"b" + std::to_string(i), v(i), u(i - 1)});
  GraphRef E = make_graph("ex51", vs, es);

  std::vector<std::string> G0, fig_vs;
  std::map<std::string, std::string> vrename;
  for (std::uint64_t i = 0; i <= n; ++i) {
    G0.push_back(v(i));
    fig_vs.push_back(v(i));
    vrename[v(i)] = v(i);
  }
  std::vector<FigureEdge> fes;
  auto xs = [&](std::uint64_t upto) {
    std::vector<std::string> w;
    for (std::uint64_t i = 1; i <= upto; ++i) w.push_back("x" + std::to_string(i));
    return w;
  };
  {
    auto w = xs(1);
    w.push_back("a1");
    fes.push_back({"f1", v(1), v(0), w});
  }
  fes.push_back({"g1", v(0), v(1), {"y0"}});
  if (n >= 2) {
    auto w = xs(2);
    w.push_back("a2");
    fes.push_back({"f2", v(2), v(0), w});
  }
  for (std::uint64_t i = 3; i <= n; ++i) {
    auto wa = xs(i - 1);
    wa.push_back("b" + std::to_string(i));
    fes.push_back({"f" + std::to_string(i) + "a", v(i), v(0), wa});
    auto wb = xs(i);
    wb.push_back("a" + std::to_string(i));
    fes.push_back({"f" + std::to_string(i) + "b", v(i), v(0), wb});
  }
  return assemble("ex51", E, G0, fig_vs, vrename, fes);
}

Fixture fixture_ex52(std::uint64_t depth) {
  Graph base = Graph::make("ex52src", {"v", "w"}, {});
  MultiGraph F =
      MultiGraph::make(base, {Bundle{"b", "w", "v", std::nullopt}});
  GraphRef E = std::make_shared<const Graph>(
      desingularise_truncated(F, depth).graph->with_name("ex52"));

  std::map<std::string, std::string> vrename{{"v", "v"}, {"w", "w"}};
  std::vector<FigureEdge> fes;
  fes.push_back({"b_e0", "w", "v", {"b_e0"}});
  for (std::uint64_t i = 1; i < depth; ++i) {
    std::vector<std::string> wit;
    for (std::uint64_t j = 1; j <= i; ++j) wit.push_back("b_f" + std::to_string(j));
    wit.push_back("b_e" + std::to_string(i));
    fes.push_back({"b_e" + std::to_string(i), "w", "v", wit});
  }
  return assemble("ex52", E, {"v", "w"}, {"v", "w"}, vrename, fes);
}

Fixture fixture_ex53(std::uint64_t depth) {
  // F: depth parallel edges e1..ek from w to v; in-delayed with
  // d(e_i) = i-1, d(w) = depth-1, d(v) = 0.
  std::uint64_t k = depth;
  std::vector<std::string> vs{"v", "w"};
  std::vector<Edge> es;
  for (std::uint64_t i = 1; i <= k; ++i)
    es.push_back(Edge{"e" + std::to_string(i), "w", "v"});
  Graph F = Graph::make("ex53src", vs, es);
  DelayVector d;
  d.vertex_delay["v"] = 0;
  d.vertex_delay["w"] = k - 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    d.edge_delay["e" + std::to_string(i)] = i - 1;
  GraphRef E = std::make_shared<const Graph>(
      in_delay(F, d).graph->with_name("ex53"));

  std::map<std::string, std::string> vrename{{"v#0", "v"}, {"w#0", "w"}};
  std::vector<FigureEdge> fes;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::vector<std::string> wit{"e" + std::to_string(i)};
    for (std::uint64_t j = i - 1; j >= 1; --j)
      wit.push_back("w#e" + std::to_string(j));
    fes.push_back({"e" + std::to_string(i), "w", "v", wit});
  }
  return assemble("ex53", E, {"v#0", "w#0"}, {"v", "w"}, vrename, fes);
}

}  // namespace

Fixture fixture(FixtureName name, std::uint64_t depth) {
  if (depth < 2) throw Error("fixture depth must be >= 2");
  switch (name) {
    case FixtureName::EX51:
      return fixture_ex51(depth);
    case FixtureName::EX52:
      return fixture_ex52(depth);
    case FixtureName::EX53:
      return fixture_ex53(depth);
  }
  throw Error("unreachable");
}

GraphRef single_loop_graph() {
  return make_graph("loop", {"v"}, {Edge{"a", "v", "v"}});
}

GraphRef two_parallel_edges_graph() {
  return make_graph("parallel", {"v", "w"},
                    {Edge{"e", "w", "v"}, Edge{"f", "w", "v"}});
}

std::string serialize_expected_contraction(const Fixture& fx) {
  std::ostringstream out;
  out << serialize(*fx.expected);
  for (const auto& [id, beta] : fx.expected_witness)
    out << "witness " << id << " = " << path_to_string(beta) << "\n";
  return out.str();
}

}  // namespace lpa
