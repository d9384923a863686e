#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>

namespace lpa {

bool valid_identifier(const std::string& id) {
  if (id.empty() || id.front() == '.') return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '#' || c == '.';
    if (!ok) return false;
  }
  return true;
}

Graph Graph::make(std::string name, std::vector<std::string> vertices,
                  std::vector<Edge> edges) {
  Graph g;
  g.name_ = std::move(name);
  if (!g.name_.empty() && !valid_identifier(g.name_))
    throw Error("invalid graph name '" + g.name_ + "'");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!valid_identifier(vertices[i]))
      throw Error("invalid vertex identifier '" + vertices[i] + "'");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw Error("duplicate vertex '" + vertices[i] + "'");
  }
  g.vertices_ = std::move(vertices);
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& v : g.vertices_) {
    g.in_by_vertex_[v];
    g.out_by_vertex_[v];
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!valid_identifier(e.id))
      throw Error("invalid edge identifier '" + e.id + "'");
    if (i > 0 && e.id == edges[i - 1].id)
      throw Error("duplicate edge '" + e.id + "'");
    if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.src))
      throw Error("edge '" + e.id + "': unknown source vertex '" + e.src + "'");
    if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.rng))
      throw Error("edge '" + e.id + "': unknown range vertex '" + e.rng + "'");
    g.edge_by_id_.emplace(e.id, e);
    g.in_by_vertex_[e.rng].push_back(e.id);
    g.out_by_vertex_[e.src].push_back(e.id);
  }
  g.edges_ = std::move(edges);
  // already sorted: edges were inserted in id order
  return g;
}

GraphRef make_graph(std::string name, std::vector<std::string> vertices,
                    std::vector<Edge> edges) {
  return std::make_shared<const Graph>(
      Graph::make(std::move(name), std::move(vertices), std::move(edges)));
}

bool Graph::has_vertex(const std::string& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(const std::string& e) const {
  return edge_by_id_.count(e) != 0;
}

const Edge& Graph::edge(const std::string& e) const {
  auto it = edge_by_id_.find(e);
  if (it == edge_by_id_.end()) throw Error("unknown edge '" + e + "'");
  return it->second;
}

const std::vector<std::string>& Graph::in_edges(const std::string& v) const {
  auto it = in_by_vertex_.find(v);
  if (it == in_by_vertex_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

const std::vector<std::string>& Graph::out_edges(const std::string& v) const {
  auto it = out_by_vertex_.find(v);
  if (it == out_by_vertex_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

std::optional<std::string> Graph::special_in_edge(const std::string& v) const {
  const auto& in = in_edges(v);
  if (in.empty()) return std::nullopt;
  return in.front();
}

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------
// Path

Path Path::make(const Graph& g, std::vector<std::string> edge_ids) {
  if (edge_ids.empty())
    throw Error("Path::make requires at least one edge; use Path::vertex");
  for (std::size_t i = 0; i + 1 < edge_ids.size(); ++i) {
    const Edge& a = g.edge(edge_ids[i]);
    const Edge& b = g.edge(edge_ids[i + 1]);
    if (a.src != b.rng)
      throw Error("path composition violated between '" + a.id + "' and '" +
                  b.id + "': s(" + a.id + ")=" + a.src + " but r(" + b.id +
                  ")=" + b.rng);
  }
  std::string src = g.edge(edge_ids.back()).src;
  return Path{std::move(edge_ids), std::move(src)};
}

std::string Path::range(const Graph& g) const {
  if (edges.empty()) return anchor;
  return g.edge(edges.front()).rng;
}

std::vector<std::string> Path::interior_sources(const Graph& g) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    out.push_back(g.edge(edges[i]).src);
  return out;
}

bool Path::valid_in(const Graph& g) const {
  if (edges.empty()) return g.has_vertex(anchor);
  for (const auto& e : edges)
    if (!g.has_edge(e)) return false;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (g.edge(edges[i]).src != g.edge(edges[i + 1]).rng) return false;
  return anchor == g.edge(edges.back()).src;
}

Path concat(const Graph& g, const Path& mu, const Path& nu) {
  if (mu.source() != nu.range(g))
    throw Error("cannot compose paths: s(mu)=" + mu.source() +
                " differs from r(nu)=" + nu.range(g));
  if (nu.empty()) return mu;
  Path out = mu;
  out.edges.insert(out.edges.end(), nu.edges.begin(), nu.edges.end());
  out.anchor = nu.anchor;
  return out;
}

std::string path_to_string(const Path& p) {
  if (p.empty()) return p.anchor;
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += '.';
    out += p.edges[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// MultiGraph

MultiGraph MultiGraph::make(Graph base, std::vector<Bundle> bundles) {
  std::sort(bundles.begin(), bundles.end(),
            [](const Bundle& a, const Bundle& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const Bundle& b = bundles[i];
    if (!valid_identifier(b.id))
      throw Error("invalid bundle identifier '" + b.id + "'");
    if (i > 0 && b.id == bundles[i - 1].id)
      throw Error("duplicate bundle '" + b.id + "'");
    if (base.has_edge(b.id))
      throw Error("bundle id '" + b.id + "' collides with an edge id");
    if (!base.has_vertex(b.src))
      throw Error("bundle '" + b.id + "': unknown source vertex '" + b.src + "'");
    if (!base.has_vertex(b.rng))
      throw Error("bundle '" + b.id + "': unknown range vertex '" + b.rng + "'");
    if (b.multiplicity && *b.multiplicity == 0)
      throw Error("bundle '" + b.id + "': multiplicity must be positive");
  }
  return MultiGraph{std::move(base), std::move(bundles)};
}

// ---------------------------------------------------------------------------
// Vertex-set operations

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_vertices(const Graph& g, const std::vector<std::string>& vs) {
  for (const auto& v : vs)
    if (!g.has_vertex(v)) throw Error("unknown vertex '" + v + "'");
}

}  // namespace

std::vector<std::string> singular_vertices(const Graph& g) {
  // Finite graphs have no infinite receivers, so singular = source.
  std::vector<std::string> out;
  for (const auto& v : g.vertices())
    if (g.in_edges(v).empty()) out.push_back(v);
  return out;
}

AcyclicResult is_acyclic(const Graph& g, const std::vector<std::string>& vs) {
  require_vertices(g, vs);
  std::set<std::string> keep(vs.begin(), vs.end());
  // Iterative DFS over the induced subgraph, vertices and edges in sorted
  // order so the witness is deterministic.
  std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
  std::map<std::string, std::string> via;  // vertex -> edge that led into it
  for (const auto& root : vs) {
    if (state[root]) continue;
    std::vector<std::pair<std::string, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      const auto& outs = g.out_edges(v);
      bool advanced = false;
      while (idx < outs.size()) {
        const Edge& e = g.edge(outs[idx++]);
        if (!keep.count(e.rng)) continue;
        if (state[e.rng] == 1) {
          // Back edge e: v -> w closes a cycle w ->* v -> w. Collect the
          // stack segment from w to v; in paper order the path starts with
          // the edge whose range is w.
          std::vector<std::string> rev;  // edges from w forward to v
          std::vector<std::string> chain;
          for (auto it = stack.begin(); it != stack.end(); ++it)
            chain.push_back(it->first);
          auto wpos = std::find(chain.begin(), chain.end(), e.rng);
          for (auto it = wpos + 1; it != chain.end(); ++it)
            rev.push_back(via[*it]);
          rev.push_back(e.id);  // v -> w
          // rev lists edges source-to-range along the walk; paper order is
          // range end first, i.e. reversed.
          std::vector<std::string> paper(rev.rbegin(), rev.rend());
          return AcyclicResult{false, Path::make(g, paper)};
        }
        if (state[e.rng] == 0) {
          state[e.rng] = 1;
          via[e.rng] = e.id;
          stack.emplace_back(e.rng, 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return AcyclicResult{};
}

bool is_cycle(const Graph& g, const Path& p) {
  if (p.empty() || !p.valid_in(g)) return false;
  if (p.source() != p.range(g)) return false;
  std::set<std::string> seen;
  for (const auto& eid : p.edges)
    if (!seen.insert(g.edge(eid).src).second) return false;
  return true;
}

std::vector<std::string> hereditary_closure(const Graph& g,
                                            const std::vector<std::string>& V) {
  require_vertices(g, V);
  std::set<std::string> H(V.begin(), V.end());
  std::deque<std::string> work(V.begin(), V.end());
  while (!work.empty()) {
    std::string v = work.front();
    work.pop_front();
    for (const auto& eid : g.in_edges(v)) {
      const std::string& w = g.edge(eid).src;
      if (H.insert(w).second) work.push_back(w);
    }
  }
  return {H.begin(), H.end()};
}

std::vector<std::string> saturated_hereditary_closure(
    const Graph& g, const std::vector<std::string>& V) {
  require_vertices(g, V);
  std::set<std::string> H(V.begin(), V.end());
  // Worklist interleaving both rules; saturation re-scans all vertices on
  // change, which is fine at the scales handled here.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> frontier(H.begin(), H.end());
    for (const auto& v : frontier)
      for (const auto& eid : g.in_edges(v))
        if (H.insert(g.edge(eid).src).second) changed = true;
    for (const auto& v : g.vertices()) {
      if (H.count(v)) continue;
      const auto& in = g.in_edges(v);
      if (in.empty()) continue;  // saturation needs 0 < |r^{-1}(v)|
      bool all_in = true;
      for (const auto& eid : in)
        if (!H.count(g.edge(eid).src)) {
          all_in = false;
          break;
        }
      if (all_in) {
        H.insert(v);
        changed = true;
      }
    }
  }
  return {H.begin(), H.end()};
}

bool is_saturated_hereditary(const Graph& g,
                             const std::vector<std::string>& H) {
  require_vertices(g, H);
  std::set<std::string> hs(H.begin(), H.end());
  for (const auto& v : g.vertices()) {
    if (hs.count(v)) {
      for (const auto& eid : g.in_edges(v))
        if (!hs.count(g.edge(eid).src)) return false;  // not hereditary
    } else {
      const auto& in = g.in_edges(v);
      if (in.empty()) continue;
      bool all_in = true;
      for (const auto& eid : in)
        if (!hs.count(g.edge(eid).src)) {
          all_in = false;
          break;
        }
      if (all_in) return false;  // not saturated
    }
  }
  return true;
}

bool is_full(const Graph& g, const std::vector<std::string>& V) {
  return saturated_hereditary_closure(g, V) == g.vertices();
}

Graph quotient_graph(const Graph& g, const std::vector<std::string>& H) {
  auto hs = sorted_unique(H);
  if (!is_saturated_hereditary(g, hs))
    throw Error("quotient_graph: H is not saturated hereditary");
  std::set<std::string> drop(hs.begin(), hs.end());
  std::vector<std::string> vs;
  for (const auto& v : g.vertices())
    if (!drop.count(v)) vs.push_back(v);
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (drop.count(e.src)) continue;
    if (drop.count(e.rng))
      throw Error("quotient_graph: hereditarity violated at edge '" + e.id + "'");
    es.push_back(e);
  }
  return Graph::make(g.name().empty() ? "q" : g.name() + ".q", std::move(vs),
                     std::move(es));
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len,
                                  const PathFilter& filter) {
  std::vector<Path> out;
  auto admit = [&](const Path& p) {
    if (p.length() < filter.min_len) return;
    if (filter.range_in && !filter.range_in->count(p.range(g))) return;
    if (filter.source_in && !filter.source_in->count(p.source())) return;
    out.push_back(p);
  };
  if (filter.min_len == 0)
    for (const auto& v : g.vertices()) admit(Path::vertex(v));
  // Grow at the source end: extending mu by e (s(mu) = r(e)) keeps the
  // range fixed and moves the source to s(e). Interior sources of the
  // extension are s(mu_i) for i < |mu|+1, i.e. the old source joins the
  // interior, so the interior filter is checked on the old source.
  std::vector<Path> layer;
  for (const auto& e : g.edges()) {
    Path p{{e.id}, e.src};
    layer.push_back(p);
  }
  std::sort(layer.begin(), layer.end());
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    for (const auto& p : layer) admit(p);
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : layer) {
      if (filter.interior_in && !filter.interior_in->count(p.source()))
        continue;  // the current source would become an interior source
      for (const auto& eid : g.in_edges(p.source())) {
        Path q = p;
        q.edges.push_back(eid);
        q.anchor = g.edge(eid).src;
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  return out;
}

bool canonical_isomorphic(const Graph& g1, const Graph& g2,
                          const std::map<std::string, std::string>& rename) {
  // Totality on g1.
  for (const auto& v : g1.vertices())
    if (!rename.count(v))
      throw Error("rename map not total: missing vertex '" + v + "'");
  for (const auto& e : g1.edges())
    if (!rename.count(e.id))
      throw Error("rename map not total: missing edge '" + e.id + "'");
  // Bijectivity onto g2's identifier sets, kind by kind.
  std::set<std::string> vimg, eimg;
  for (const auto& v : g1.vertices()) {
    const auto& t = rename.at(v);
    if (!vimg.insert(t).second)
      throw Error("rename map not injective on vertices at '" + t + "'");
  }
  for (const auto& e : g1.edges()) {
    const auto& t = rename.at(e.id);
    if (!eimg.insert(t).second)
      throw Error("rename map not injective on edges at '" + t + "'");
  }
  std::set<std::string> v2(g2.vertices().begin(), g2.vertices().end());
  std::set<std::string> e2;
  for (const auto& e : g2.edges()) e2.insert(e.id);
  if (vimg != v2 || eimg != e2)
    throw Error("rename map is not a bijection onto the target graph");
  for (const auto& e : g1.edges()) {
    const Edge& t = g2.edge(rename.at(e.id));
    if (t.src != rename.at(e.src) || t.rng != rename.at(e.rng)) return false;
  }
  return true;
}

}  // namespace lpa
