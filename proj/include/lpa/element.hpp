#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa {

/// s_mu s_{nu*}. Nonzero only when s(mu) = s(nu) (the junction vertex);
/// mu = nu = a length-0 path at v is the vertex idempotent p_v.
struct Monomial {
  Path mu;
  Path nu;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A raw (not yet normalized) term.
struct RawTerm {
  std::int64_t coef;
  Path mu;
  Path nu;
};

/// An element of L_R(E) kept permanently in normal form over the canonical
/// basis: no stored monomial has mu and nu both ending (at the source end)
/// in the special edge of that edge's range vertex. Equality of elements is
/// equality of term maps; this is basis freeness.
///
/// Elements are immutable values tagged with their graph and ring; mixing
/// graphs or rings in arithmetic throws.
class Element {
 public:
  static Element zero(GraphRef g, Ring ring);
  /// p_v.
  static Element vertex(GraphRef g, Ring ring, const std::string& v);
  /// s_mu (mu may be a vertex path, giving p_v).
  static Element path(GraphRef g, Ring ring, const Path& mu);
  /// s_{nu*}.
  static Element ghost(GraphRef g, Ring ring, const Path& nu);
  /// Normal form of c * s_mu s_{nu*}; the zero element when c = 0 or the
  /// junction vertices differ.
  static Element monomial(GraphRef g, Ring ring, std::int64_t c, const Path& mu,
                          const Path& nu);
  /// Normal form of an arbitrary formal combination. The result does not
  /// depend on the order of `terms`.
  static Element from_terms(GraphRef g, Ring ring,
                            const std::vector<RawTerm>& terms);

  const GraphRef& graph() const { return graph_; }
  const Ring& ring() const { return ring_; }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator*(const Element& rhs) const;
  Element scaled(std::int64_t c) const;
  Element negated() const { return scaled(-1); }

  /// Term-wise c mu nu* -> c nu mu* (coefficient involution is the
  /// identity on both rings).
  Element star() const;

  /// Terms with |mu| - |nu| = n. Rewriting preserves this degree, so the
  /// grading is well defined on normal forms.
  Element grade_component(std::int64_t n) const;
  std::vector<std::int64_t> degrees() const;

  friend bool operator==(const Element& a, const Element& b) {
    return *a.graph_ == *b.graph_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Element(GraphRef g, Ring ring) : graph_(std::move(g)), ring_(ring) {}
  void check_compatible(const Element& rhs) const;
  /// Rewrites c * mu nu* into basis terms and accumulates them.
  void accumulate(std::int64_t c, Path mu, Path nu);
  void add_basis_term(std::int64_t c, Path mu, Path nu);

  GraphRef graph_;
  Ring ring_;
  std::map<Monomial, std::int64_t> terms_;
};

}  // namespace lpa
