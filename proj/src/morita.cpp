#include "lpa/morita.hpp"

#include <algorithm>

#include "lpa/expr.hpp"
#include "lpa/sampling.hpp"

namespace lpa {

MoritaSpec::MoritaSpec(GraphRef g, Ring r, std::vector<std::string> v)
    : graph(std::move(g)), ring(r), V(std::move(v)) {
  std::sort(V.begin(), V.end());
  V.erase(std::unique(V.begin(), V.end()), V.end());
  for (const auto& u : V)
    if (!graph->has_vertex(u)) throw Error("unknown vertex '" + u + "'");
}

namespace {

void check_same_algebra(const MoritaSpec& spec, const Element& x) {
  if (!(*x.graph() == *spec.graph) || !(x.ring() == spec.ring))
    throw Error("element not over the Morita spec's graph/ring");
}

}  // namespace

bool in_M(const MoritaSpec& spec, const Element& x) {
  check_same_algebra(spec, x);
  auto vs = spec.vset();
  for (const auto& [m, c] : x.terms())
    if (!vs.count(m.mu.range(*spec.graph))) return false;
  return true;
}

bool in_Mstar(const MoritaSpec& spec, const Element& x) {
  check_same_algebra(spec, x);
  auto vs = spec.vset();
  for (const auto& [m, c] : x.terms())
    if (!vs.count(m.nu.range(*spec.graph))) return false;
  return true;
}

bool in_MMstar(const MoritaSpec& spec, const Element& x) {
  return in_M(spec, x) && in_Mstar(spec, x);
}

bool in_MstarM(const MoritaSpec& spec, const Element& x) {
  check_same_algebra(spec, x);
  auto H = saturated_hereditary_closure(*spec.graph, spec.V);
  if (H.size() == spec.graph->vertices().size()) return true;  // full: ideal is everything
  auto quotient = std::make_shared<const Graph>(quotient_graph(*spec.graph, H));
  std::set<std::string> dropped(H.begin(), H.end());
  // Map x through the quotient family (generators meeting H go to 0,
  // survivors to themselves) and test for 0. Surviving paths are re-read
  // over the quotient graph, whose normal form may differ.
  Element image = Element::zero(quotient, spec.ring);
  for (const auto& [m, c] : x.terms()) {
    bool alive = !dropped.count(m.mu.source());
    auto path_alive = [&](const Path& p) {
      if (p.empty()) return !dropped.count(p.anchor);
      for (const auto& eid : p.edges)
        if (!quotient->has_edge(eid)) return false;
      return true;
    };
    if (alive && path_alive(m.mu) && path_alive(m.nu))
      image = image + Element::monomial(quotient, spec.ring, c, m.mu, m.nu);
  }
  return image.is_zero();
}

MoritaReport verify_morita_context(const MoritaSpec& spec, int samples,
                                   std::uint64_t seed) {
  MoritaReport report;
  report.seed = seed;
  report.samples = samples;
  Diagnostics& diag = report.diag;
  auto vs = spec.vset();

  // Sampling bounds per the module contract: <= 6 terms, paths <= 4.
  constexpr std::size_t kTerms = 6;
  constexpr std::size_t kLen = 4;

  if (spec.graph->vertices().empty()) {
    for (const char* name :
         {"mmstar-generators", "mmstar-product-closure", "mmstar-in-mstarm",
          "ideal-absorption", "mixed-associativity", "bimodule-closure"})
      diag.pass(name);
    return report;
  }

  Sampler sm(spec.graph, spec.ring, seed);
  std::string witness;

  // (i) MM* contains its defining monomials and is closed under products.
  bool ok = true;
  for (int i = 0; i < samples && ok; ++i) {
    Element x = sm.element_in_MMstar(vs, kTerms, kLen);
    if (!in_MMstar(spec, x)) {
      ok = false;
      witness = to_expr(x);
    }
  }
  diag.record("mmstar-generators", ok, witness);

  ok = true;
  witness.clear();
  for (int i = 0; i < samples && ok; ++i) {
    Element x = sm.element_in_MMstar(vs, kTerms, kLen);
    Element y = sm.element_in_MMstar(vs, kTerms, kLen);
    if (!in_MMstar(spec, x * y)) {
      ok = false;
      witness = to_expr(x) + " ; " + to_expr(y);
    }
  }
  diag.record("mmstar-product-closure", ok, witness);

  // (ii) MM* is contained in the ideal M*M.
  ok = true;
  witness.clear();
  for (int i = 0; i < samples && ok; ++i) {
    Element x = sm.element_in_MMstar(vs, kTerms, kLen);
    if (in_MMstar(spec, x) && !in_MstarM(spec, x)) {
      ok = false;
      witness = to_expr(x);
    }
  }
  diag.record("mmstar-in-mstarm", ok, witness);

  // (iii) Ideal absorption: a * x * b stays in M*M for x in M*M.
  ok = true;
  witness.clear();
  for (int i = 0; i < samples && ok; ++i) {
    Element a = sm.element(kTerms, kLen);
    Element b = sm.element(kTerms, kLen);
    // x = l * p_v * r lies in the ideal generated by {p_v : v in V}.
    Element x = Element::zero(spec.graph, spec.ring);
    if (!vs.empty()) {
      std::vector<std::string> pool(vs.begin(), vs.end());
      const std::string& v = pool[sm.rng.below(pool.size())];
      x = sm.element(kTerms, kLen) *
          Element::vertex(spec.graph, spec.ring, v) * sm.element(kTerms, kLen);
    }
    if (!in_MstarM(spec, x) || !in_MstarM(spec, a * x * b)) {
      ok = false;
      witness = to_expr(x);
    }
  }
  diag.record("ideal-absorption", ok, witness);

  // (iv) Mixed associativity: the identities realized by the pairing maps
  // Psi and Phi, i.e. (mn)m' = m(nm') and (nm)n' = n(mn').
  ok = true;
  witness.clear();
  for (int i = 0; i < samples && ok; ++i) {
    Element m = sm.element_in_M(vs, kTerms, kLen);
    Element m2 = sm.element_in_M(vs, kTerms, kLen);
    Element n = sm.element_in_M(vs, kTerms, kLen).star();   // in M*
    Element n2 = sm.element_in_M(vs, kTerms, kLen).star();  // in M*
    if (!((m * n) * m2 == m * (n * m2)) || !((n * m) * n2 == n * (m * n2))) {
      ok = false;
      witness = to_expr(m) + " ; " + to_expr(n) + " ; " + to_expr(m2);
    }
  }
  diag.record("mixed-associativity", ok, witness);

  // (v) Bimodule closures: (MM*)M in M and M(M*M) in M.
  ok = true;
  witness.clear();
  for (int i = 0; i < samples && ok; ++i) {
    Element u = sm.element_in_MMstar(vs, kTerms, kLen);
    Element m = sm.element_in_M(vs, kTerms, kLen);
    Element a = sm.element(kTerms, kLen);
    Element b = sm.element(kTerms, kLen);
    Element x = Element::zero(spec.graph, spec.ring);
    if (!vs.empty()) {
      std::vector<std::string> pool(vs.begin(), vs.end());
      x = a * Element::vertex(spec.graph, spec.ring, pool[sm.rng.below(pool.size())]) * b;
    }
    if (!in_M(spec, u * m) || !in_M(spec, m * x)) {
      ok = false;
      witness = to_expr(u) + " ; " + to_expr(m);
    }
  }
  diag.record("bimodule-closure", ok, witness);

  return report;
}

}  // namespace lpa
