#include "lpa/family.hpp"

#include "lpa/expr.hpp"

namespace lpa {

FamilyAssignment::FamilyAssignment(GraphRef source, GraphRef target, Ring ring,
                                   std::map<std::string, Element> vertex_images,
                                   std::map<std::string, Element> edge_images,
                                   std::map<std::string, Element> ghost_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      ring_(ring),
      vertex_images_(std::move(vertex_images)),
      edge_images_(std::move(edge_images)),
      ghost_images_(std::move(ghost_images)) {
  for (const auto& v : source_->vertices())
    if (!vertex_images_.count(v))
      throw Error("family assignment missing vertex image for '" + v + "'");
  for (const auto& e : source_->edges()) {
    if (!edge_images_.count(e.id))
      throw Error("family assignment missing edge image for '" + e.id + "'");
    if (!ghost_images_.count(e.id))
      throw Error("family assignment missing ghost image for '" + e.id + "'");
  }
  auto check_target = [&](const std::map<std::string, Element>& m) {
    for (const auto& [id, el] : m) {
      if (!(*el.graph() == *target_) || !(el.ring() == ring_))
        throw Error("family image for '" + id +
                    "' lies in the wrong algebra");
    }
  };
  check_target(vertex_images_);
  check_target(edge_images_);
  check_target(ghost_images_);
}

FamilyAssignment FamilyAssignment::universal(GraphRef g, Ring ring) {
  std::map<std::string, Element> vs, es, gs;
  for (const auto& v : g->vertices()) vs.emplace(v, Element::vertex(g, ring, v));
  for (const auto& e : g->edges()) {
    Path p{{e.id}, e.src};
    es.emplace(e.id, Element::path(g, ring, p));
    gs.emplace(e.id, Element::ghost(g, ring, p));
  }
  return FamilyAssignment(g, g, ring, std::move(vs), std::move(es),
                          std::move(gs));
}

const Element& FamilyAssignment::vertex_image(const std::string& v) const {
  auto it = vertex_images_.find(v);
  if (it == vertex_images_.end()) throw Error("unknown vertex '" + v + "'");
  return it->second;
}

const Element& FamilyAssignment::edge_image(const std::string& e) const {
  auto it = edge_images_.find(e);
  if (it == edge_images_.end()) throw Error("unknown edge '" + e + "'");
  return it->second;
}

const Element& FamilyAssignment::ghost_image(const std::string& e) const {
  auto it = ghost_images_.find(e);
  if (it == ghost_images_.end()) throw Error("unknown edge '" + e + "'");
  return it->second;
}

Diagnostics check_family(FamilyAssignment& fam) {
  Diagnostics diag;
  const Graph& src = *fam.source();
  const Ring ring = fam.ring();
  const GraphRef& tgt = fam.target();
  const Element zero = Element::zero(tgt, ring);

  // Mutually orthogonal idempotents.
  for (const auto& v : src.vertices()) {
    const Element& pv = fam.vertex_image(v);
    if (!(pv * pv == pv)) {
      diag.fail("idempotent", "P(" + v + ")^2 != P(" + v + ")");
    }
    for (const auto& w : src.vertices()) {
      if (w <= v) continue;
      if (!((pv * fam.vertex_image(w)).is_zero()))
        diag.fail("orthogonal", "P(" + v + ")*P(" + w + ") != 0");
    }
  }

  // (L1): P_{r(e)} S_e = S_e = S_e P_{s(e)} and the ghost-side variants.
  for (const auto& e : src.edges()) {
    const Element& se = fam.edge_image(e.id);
    const Element& sx = fam.ghost_image(e.id);
    const Element& pr = fam.vertex_image(e.rng);
    const Element& ps = fam.vertex_image(e.src);
    if (!(pr * se == se && se * ps == se))
      diag.fail("L1", "edge " + e.id);
    if (!(ps * sx == sx && sx * pr == sx))
      diag.fail("L1*", "edge " + e.id);
  }

  // (L2): S_{e*} S_f = delta_{e,f} P_{s(e)}.
  for (const auto& e : src.edges()) {
    for (const auto& f : src.edges()) {
      Element prod = fam.ghost_image(e.id) * fam.edge_image(f.id);
      const Element& want =
          e.id == f.id ? fam.vertex_image(e.src) : zero;
      if (!(prod == want))
        diag.fail("L2", "pair (" + e.id + "," + f.id + ")");
    }
  }

  // (L3) at every non-singular vertex of the source graph.
  for (const auto& v : src.vertices()) {
    const auto& in = src.in_edges(v);
    if (in.empty()) continue;
    Element sum = Element::zero(tgt, ring);
    for (const auto& eid : in)
      sum = sum + fam.edge_image(eid) * fam.ghost_image(eid);
    if (!(sum == fam.vertex_image(v)))
      diag.fail("L3", "vertex " + v);
  }

  if (diag.items.empty()) diag.pass("family");
  fam.verified_ = diag.passed();
  return diag;
}

Element eval_hom(const FamilyAssignment& fam, const Element& x) {
  if (!fam.verified())
    throw Error("eval_hom requires a family that passed check_family");
  if (!(*x.graph() == *fam.source()) || !(x.ring() == fam.ring()))
    throw Error("eval_hom: element not over the family's source algebra");
  Element out = Element::zero(fam.target(), fam.ring());
  for (const auto& [m, c] : x.terms()) {
    Element img = fam.vertex_image(m.mu.empty() ? m.mu.anchor
                                                : x.graph()->edge(m.mu.edges.front()).rng);
    for (const auto& eid : m.mu.edges) img = img * fam.edge_image(eid);
    // Ghost part: S_{nu*} = S_{nu_k*} ... S_{nu_1*}, i.e. reverse order.
    if (m.nu.empty()) {
      img = img * fam.vertex_image(m.nu.anchor);
    } else {
      for (auto it = m.nu.edges.rbegin(); it != m.nu.edges.rend(); ++it)
        img = img * fam.ghost_image(*it);
    }
    out = out + img.scaled(c);
  }
  return out;
}

}  // namespace lpa
