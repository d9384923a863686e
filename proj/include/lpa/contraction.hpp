#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpa/diagnostics.hpp"
#include "lpa/family.hpp"
#include "lpa/morita.hpp"

namespace lpa {

/// Result of contracting the complement subgraph T of E onto G0: the new
/// graph G on G0 with one edge e_beta per path beta into G0 through T,
/// the witness map e_beta -> beta, and the Leavitt G-family
/// Q_v = p_v, T_{e_beta} = s_beta inside L_R(E).
struct ContractionResult {
  GraphRef E;
  std::vector<std::string> G0;
  GraphRef G;
  std::map<std::string, Path> witness;  // G-edge id -> beta in E
  FamilyAssignment family;
  Ring ring;
  /// B_v for every vertex of E (precomputed; preimage expands junctions
  /// in T^0 through these).
  std::map<std::string, std::vector<Path>> b_sets;

  std::vector<std::string> T0() const;
};

/// Hypothesis checks for the contraction theorem: G0 contains the singular
/// vertices; T (induced on E^0 \ G0) is acyclic. The no-heads hypothesis
/// and conditions (T1)-(T4) concern infinite paths and hold vacuously for
/// finite E with acyclic T; they are recorded as vacuously-satisfied items
/// naming the finiteness argument.
Diagnostics validate(const Graph& E, const std::vector<std::string>& G0);

/// B_v: all beta in E* \ E^0 with r(beta) = v, s(beta) in G0, and every
/// interior source in T^0, in (length, lexicographic) order. Requires
/// validate to pass (interior vertices then lie in the finite acyclic T,
/// which bounds the enumeration).
std::vector<Path> b_set(const Graph& E, const std::vector<std::string>& G0,
                        const std::string& v);

/// Builds G from the union of the B_w. G-edge naming is
/// `c_<witness edge ids joined by '.'>`, making the witness map invertible
/// from names alone. Throws if validate fails.
ContractionResult contract(GraphRef E, const std::vector<std::string>& G0,
                           Ring ring);

/// check_family for the contraction family.
Diagnostics family_check(ContractionResult& res);

/// normal_form(p_v - sum_{beta in B_v} s_beta s_{beta*}) = 0, for
/// v in T^0 (B_v is finite and nonempty there once validate passed).
bool b_identity_check(const Graph& E, const std::vector<std::string>& G0,
                      Ring ring, const std::string& v);

/// The homomorphism L_R(G) -> L_R(E) induced by the contraction family.
Element phi(const ContractionResult& res, const Element& x);

/// Inverts phi on MM* (V = G0): expands junctions in T^0 through the
/// B-identity, factors every path at its visits to G0 into B-segments and
/// maps each segment to its G-edge. A factorization failure would falsify
/// the theorem and raises an error with a witness.
Element preimage(const ContractionResult& res, const Element& y);

/// Structural injectivity hypotheses (vertex images are single vertex
/// idempotents, edge images single monomials s_beta with |beta| >= 1) plus
/// a spot check phi(x) != 0 on `samples` random nonzero x over G.
Diagnostics injectivity_check(const ContractionResult& res, int samples,
                              std::uint64_t seed);

/// Serialization: G in the standard graph format followed by one
/// `witness <G-edge id> = <E-edge ids dot-joined>` line per edge.
std::string serialize_contraction(const ContractionResult& res);

}  // namespace lpa
