#include "lpa/sampling.hpp"

#include <algorithm>

namespace lpa {

std::int64_t Sampler::coefficient() {
  if (ring.kind == Ring::Kind::IntegersMod) return rng.range(1, ring.mod - 1);
  std::int64_t c = rng.range(-3, 3);
  return c == 0 ? 1 : c;
}

Path Sampler::path_from(const std::string& from, std::size_t max_len) {
  // Extend at the range end: current path mu gains e with s(e) = r(mu),
  // becoming e . mu.
  Path p = Path::vertex(from);
  std::string head = from;  // r(p)
  std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& outs = g->out_edges(head);
    if (outs.empty()) break;
    const std::string& eid = outs[rng.below(outs.size())];
    p.edges.insert(p.edges.begin(), eid);
    head = g->edge(eid).rng;
  }
  return p;
}

std::optional<Path> Sampler::path_into(const std::set<std::string>& ranges,
                                       std::size_t max_len) {
  if (ranges.empty()) return std::nullopt;
  std::vector<std::string> pool(ranges.begin(), ranges.end());
  const std::string& r0 = pool[rng.below(pool.size())];
  if (!g->has_vertex(r0)) throw Error("unknown vertex '" + r0 + "'");
  // Extend at the source end: mu gains e with r(e) = s(mu).
  Path p = Path::vertex(r0);
  std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& ins = g->in_edges(p.source());
    if (ins.empty()) break;
    const std::string& eid = ins[rng.below(ins.size())];
    p.edges.push_back(eid);
    p.anchor = g->edge(eid).src;
  }
  return p;
}

std::pair<Path, Path> Sampler::monomial_paths(std::size_t max_len) {
  const auto& vs = g->vertices();
  const std::string& junction = vs[rng.below(vs.size())];
  return {path_from(junction, max_len), path_from(junction, max_len)};
}

Element Sampler::element(std::size_t max_terms, std::size_t max_len) {
  std::vector<RawTerm> terms;
  std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    auto [mu, nu] = monomial_paths(max_len);
    terms.push_back({coefficient(), std::move(mu), std::move(nu)});
  }
  return Element::from_terms(g, ring, terms);
}

Element Sampler::nonzero_element(std::size_t max_terms, std::size_t max_len) {
  if (g->vertices().empty())
    throw Error("cannot sample a nonzero element over the empty graph");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Element e = element(max_terms, max_len);
    if (!e.is_zero()) return e;
  }
  throw Error("sampling failed to produce a nonzero element");
}

Element Sampler::element_in_M(const std::set<std::string>& V,
                              std::size_t max_terms, std::size_t max_len) {
  Element acc = Element::zero(g, ring);
  if (V.empty()) return acc;
  std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    auto mu = path_into(V, max_len);
    if (!mu) break;
    // nu shares the junction s(mu).
    Path nu = path_from(mu->source(), max_len);
    acc = acc + Element::monomial(g, ring, coefficient(), *mu, nu);
  }
  return acc;
}

Element Sampler::element_in_MMstar(const std::set<std::string>& V,
                                   std::size_t max_terms, std::size_t max_len) {
  Element acc = Element::zero(g, ring);
  if (V.empty()) return acc;
  std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    auto mu = path_into(V, max_len);
    if (!mu) break;
    // Draw nu with range in V until it meets mu's junction; fall back to
    // nu = mu, which always qualifies.
    Path nu = *mu;
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto cand = path_into(V, max_len);
      if (cand && cand->source() == mu->source()) {
        nu = *cand;
        break;
      }
    }
    acc = acc + Element::monomial(g, ring, coefficient(), *mu, nu);
  }
  return acc;
}

GraphRef random_graph(Rng& rng, std::size_t max_vertices,
                      std::size_t max_edges, const std::string& name) {
  std::size_t nv = 1 + rng.below(max_vertices);
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::size_t ne = rng.below(max_edges + 1);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < ne; ++i) {
    std::string src = vs[rng.below(nv)];
    std::string dst = vs[rng.below(nv)];
    es.push_back(Edge{"e" + std::to_string(i), src, dst});
  }
  return make_graph(name, std::move(vs), std::move(es));
}

}  // namespace lpa
