#include "lpa/element.hpp"

#include <algorithm>

namespace lpa {

Element Element::zero(GraphRef g, Ring ring) {
  return Element(std::move(g), ring);
}

Element Element::vertex(GraphRef g, Ring ring, const std::string& v) {
  if (!g->has_vertex(v)) throw Error("unknown vertex '" + v + "'");
  Element e(std::move(g), ring);
  e.accumulate(1, Path::vertex(v), Path::vertex(v));
  return e;
}

Element Element::path(GraphRef g, Ring ring, const Path& mu) {
  if (!mu.valid_in(*g)) throw Error("path not valid in graph '" + g->name() + "'");
  Element e(std::move(g), ring);
  e.accumulate(1, mu, Path::vertex(mu.source()));
  return e;
}

Element Element::ghost(GraphRef g, Ring ring, const Path& nu) {
  if (!nu.valid_in(*g)) throw Error("path not valid in graph '" + g->name() + "'");
  Element e(std::move(g), ring);
  e.accumulate(1, Path::vertex(nu.source()), nu);
  return e;
}

Element Element::monomial(GraphRef g, Ring ring, std::int64_t c, const Path& mu,
                          const Path& nu) {
  if (!mu.valid_in(*g) || !nu.valid_in(*g))
    throw Error("path not valid in graph '" + g->name() + "'");
  Element e(std::move(g), ring);
  e.accumulate(c, mu, nu);
  return e;
}

Element Element::from_terms(GraphRef g, Ring ring,
                            const std::vector<RawTerm>& terms) {
  Element e(std::move(g), ring);
  for (const auto& t : terms) {
    if (!t.mu.valid_in(*e.graph_) || !t.nu.valid_in(*e.graph_))
      throw Error("path not valid in graph '" + e.graph_->name() + "'");
    e.accumulate(t.coef, t.mu, t.nu);
  }
  return e;
}

void Element::check_compatible(const Element& rhs) const {
  if (!(*graph_ == *rhs.graph_))
    throw Error("elements over different graphs ('" + graph_->name() + "' vs '" +
                rhs.graph_->name() + "')");
  if (!(ring_ == rhs.ring_))
    throw Error("elements over different rings (" + ring_.str() + " vs " +
                rhs.ring_.str() + ")");
}

void Element::add_basis_term(std::int64_t c, Path mu, Path nu) {
  c = ring_.normalize(c);
  if (c == 0) return;
  Monomial key{std::move(mu), std::move(nu)};
  auto [it, fresh] = terms_.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second = ring_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

// The (L3) rewrite, oriented so that the monomial whose paths both end in
// the special edge g of v = r(g) is eliminated:
//   (mu'g)(nu'g)* -> mu'nu'* - sum_{e in r^-1(v), e != g} (mu'e)(nu'e)*
// Spawned terms end in a non-special pair and are basis terms; the
// mu'nu'* branch may reduce again, so it loops. Each step shortens that
// branch, so the loop terminates within |mu| iterations.
void Element::accumulate(std::int64_t c, Path mu, Path nu) {
  c = ring_.normalize(c);
  if (c == 0) return;
  if (mu.source() != nu.source()) return;  // junction mismatch: zero
  const Graph& g = *graph_;
  while (!mu.edges.empty() && !nu.edges.empty() &&
         mu.edges.back() == nu.edges.back()) {
    const std::string& last = mu.edges.back();
    const std::string& v = g.edge(last).rng;
    if (g.special_in_edge(v) != last) break;
    mu.edges.pop_back();
    nu.edges.pop_back();
    mu.anchor = v;  // s of the new last edge is r(g) by composition
    nu.anchor = v;
    for (const auto& eid : g.in_edges(v)) {
      if (eid == last) continue;
      Path mue = mu;
      mue.edges.push_back(eid);
      mue.anchor = g.edge(eid).src;
      Path nue = nu;
      nue.edges.push_back(eid);
      nue.anchor = mue.anchor;
      add_basis_term(ring_.neg(c), std::move(mue), std::move(nue));
    }
  }
  add_basis_term(c, std::move(mu), std::move(nu));
}

Element Element::operator+(const Element& rhs) const {
  check_compatible(rhs);
  Element out = *this;
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, fresh] = out.terms_.try_emplace(m, c);
    if (!fresh) {
      it->second = ring_.add(it->second, c);
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Element Element::operator-(const Element& rhs) const {
  return *this + rhs.negated();
}

Element Element::scaled(std::int64_t c) const {
  Element out(graph_, ring_);
  for (const auto& [m, k] : terms_) {
    std::int64_t v = ring_.mul(k, c);
    if (v != 0) out.terms_.emplace(m, v);
  }
  return out;
}

namespace {

// Edge-sequence prefix test from the range end: is `shorter` an initial
// segment of `longer`?
bool seq_prefix(const std::vector<std::string>& shorter,
                const std::vector<std::string>& longer) {
  if (shorter.size() > longer.size()) return false;
  return std::equal(shorter.begin(), shorter.end(), longer.begin());
}

}  // namespace

Element Element::operator*(const Element& rhs) const {
  check_compatible(rhs);
  Element out(graph_, ring_);
  const Graph& g = *graph_;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      const Path& mu1 = m1.mu;
      const Path& nu1 = m1.nu;
      const Path& mu2 = m2.mu;
      const Path& nu2 = m2.nu;
      // (mu1 nu1*)(mu2 nu2*): (L2) cancels nu1 against mu2 from the range
      // end; the product survives only if one is a prefix of the other.
      std::int64_t c = ring_.mul(c1, c2);
      if (nu1.edges.size() <= mu2.edges.size()) {
        if (!seq_prefix(nu1.edges, mu2.edges)) continue;
        // mu2 = nu1 . delta
        Path delta{{mu2.edges.begin() + static_cast<std::ptrdiff_t>(nu1.edges.size()),
                    mu2.edges.end()},
                   mu2.anchor};
        if (nu1.edges.empty()) {
          // nu1 is the junction vertex of m1; p_{j1} meets mu2 only if
          // r(mu2) = j1 (or mu2 is the same vertex).
          if (delta.edges.empty()) {
            if (mu2.anchor != nu1.anchor) continue;
          } else if (g.edge(delta.edges.front()).rng != nu1.anchor) {
            continue;
          }
        }
        Path mu = mu1;
        mu.edges.insert(mu.edges.end(), delta.edges.begin(), delta.edges.end());
        mu.anchor = delta.edges.empty() ? mu1.anchor : delta.anchor;
        out.accumulate(c, std::move(mu), nu2);
      } else {
        if (!seq_prefix(mu2.edges, nu1.edges)) continue;
        // nu1 = mu2 . delta, delta nonempty
        Path delta{{nu1.edges.begin() + static_cast<std::ptrdiff_t>(mu2.edges.size()),
                    nu1.edges.end()},
                   nu1.anchor};
        if (mu2.edges.empty() && g.edge(delta.edges.front()).rng != mu2.anchor)
          continue;
        Path nu = nu2;
        nu.edges.insert(nu.edges.end(), delta.edges.begin(), delta.edges.end());
        nu.anchor = delta.anchor;
        out.accumulate(c, mu1, std::move(nu));
      }
    }
  }
  return out;
}

Element Element::star() const {
  Element out(graph_, ring_);
  for (const auto& [m, c] : terms_) out.accumulate(c, m.nu, m.mu);
  return out;
}

Element Element::grade_component(std::int64_t n) const {
  Element out(graph_, ring_);
  for (const auto& [m, c] : terms_) {
    std::int64_t d = static_cast<std::int64_t>(m.mu.length()) -
                     static_cast<std::int64_t>(m.nu.length());
    if (d == n) out.terms_.emplace(m, c);
  }
  return out;
}

std::vector<std::int64_t> Element::degrees() const {
  std::vector<std::int64_t> ds;
  for (const auto& [m, c] : terms_)
    ds.push_back(static_cast<std::int64_t>(m.mu.length()) -
                 static_cast<std::int64_t>(m.nu.length()));
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

}  // namespace lpa
