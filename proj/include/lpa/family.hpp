#pragma once

#include <map>
#include <string>

#include "lpa/diagnostics.hpp"
#include "lpa/element.hpp"

namespace lpa {

/// Candidate Leavitt family: images of one graph's generators inside the
/// algebra of another (possibly the same) graph. Total on the source
/// graph's vertices and edges.
class FamilyAssignment {
 public:
  FamilyAssignment(GraphRef source, GraphRef target, Ring ring,
                   std::map<std::string, Element> vertex_images,
                   std::map<std::string, Element> edge_images,
                   std::map<std::string, Element> ghost_images);

  /// The universal family of g inside its own algebra: v -> p_v, e -> s_e.
  static FamilyAssignment universal(GraphRef g, Ring ring);

  const GraphRef& source() const { return source_; }
  const GraphRef& target() const { return target_; }
  const Ring& ring() const { return ring_; }

  const Element& vertex_image(const std::string& v) const;
  const Element& edge_image(const std::string& e) const;
  const Element& ghost_image(const std::string& e) const;

  bool verified() const { return verified_; }

 private:
  friend Diagnostics check_family(FamilyAssignment& fam);

  GraphRef source_;
  GraphRef target_;
  Ring ring_;
  std::map<std::string, Element> vertex_images_;
  std::map<std::string, Element> edge_images_;
  std::map<std::string, Element> ghost_images_;
  bool verified_ = false;
};

/// Verifies mutual orthogonality/idempotency of the vertex images and
/// relations (L1), (L2), and (L3) at every non-singular source vertex, by
/// normal-form equality in the target algebra. Records each failing
/// relation with a witness. Marks the family verified on full pass.
Diagnostics check_family(FamilyAssignment& fam);

/// The homomorphism induced by a verified family: substitutes generators
/// term-wise (ghost parts in reverse edge order) and normalizes.
/// Throws if the family has not passed check_family.
Element eval_hom(const FamilyAssignment& fam, const Element& x);

}  // namespace lpa
