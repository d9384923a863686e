#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lpa/diagnostics.hpp"
#include "lpa/element.hpp"

namespace lpa {

/// A vertex subset V of a graph, with the ring fixed. M, M*, MM*, M*M are
/// never materialized; they are decidable predicates over normal forms
/// plus generator samplers.
struct MoritaSpec {
  GraphRef graph;
  Ring ring;
  std::vector<std::string> V;

  MoritaSpec(GraphRef g, Ring r, std::vector<std::string> v);
  std::set<std::string> vset() const { return {V.begin(), V.end()}; }
};

/// x in M iff every normal-form term has r(mu) in V. Sound because the
/// (L3) rewrite never touches the range ends of mu or nu.
bool in_M(const MoritaSpec& spec, const Element& x);
/// r(nu) in V for every term.
bool in_Mstar(const MoritaSpec& spec, const Element& x);
/// Both ranges in V for every term.
bool in_MMstar(const MoritaSpec& spec, const Element& x);

/// Ideal membership: M*M is the ideal generated by {p_v : v in V}, which
/// equals the kernel of the quotient map onto L_R(E / SigmaH(V)). Returns
/// true iff x maps to 0 there.
bool in_MstarM(const MoritaSpec& spec, const Element& x);

struct MoritaReport {
  Diagnostics diag;
  std::uint64_t seed = 0;
  int samples = 0;

  bool passed() const { return diag.passed(); }
  std::string to_text() const { return diag.to_text(); }
};

/// Samples `samples` pseudo-random elements per check and verifies the
/// surjective-Morita-context identities: MM* subalgebra closure and
/// membership of its defining monomials, MM* contained in the ideal M*M,
/// ideal absorption, the mixed associativity identities realizing the
/// pairing maps, and the bimodule closures (MM*)M in M and M(M*M) in M.
MoritaReport verify_morita_context(const MoritaSpec& spec, int samples,
                                   std::uint64_t seed);

}  // namespace lpa
