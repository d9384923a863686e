#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "lpa/element.hpp"

namespace lpa {

/// Certificate that s_{mu*} x s_nu compresses to a nonzero multiple of a
/// vertex idempotent, or to a polynomial in a single cycle (negative
/// powers are ghost powers, and the power 0 is p_{r(alpha)}).
struct VertexCertificate {
  Path mu;
  Path nu;
  std::int64_t coefficient = 0;
  std::string vertex;
};

struct CycleCertificate {
  Path mu;
  Path nu;
  Path alpha;
  std::map<std::int64_t, std::int64_t> coefficients;  // power -> r_i
};

using ReductionCertificate = std::variant<VertexCertificate, CycleCertificate>;

struct ReductionOutcome {
  std::optional<ReductionCertificate> certificate;  // nullopt = EXHAUSTED
  std::size_t pairs_scanned = 0;
  std::size_t bound_used = 0;
};

struct ReduceOptions {
  /// Candidate length bound for |mu|, |nu|. When unset the bound defaults
  /// to max over terms of |mu|+|nu|, escalated once by +2 before giving
  /// up; when set the bound is used as given, without escalation.
  std::optional<std::size_t> max_len;
  bool parallel = true;  // OpenMP block scan when available
};

/// Bounded certified search for the reduction theorem: enumerates pairs
/// (mu, nu) in (total length, |mu|, lex) order, computes
/// normal_form(s_{mu*} x s_nu) and pattern-matches the two conclusions.
/// Returns the first matching pair in that order; the parallel scan
/// returns the least matching pair regardless of scheduling. Throws on
/// x = 0.
ReductionOutcome reduce(const Element& x, const ReduceOptions& opts = {});

/// Serial reference implementation, kept for cross-checking the parallel
/// scan and for the benchmark baseline.
ReductionOutcome reduce_serial(const Element& x, const ReduceOptions& opts = {});

/// Recomputes s_{mu*} x s_nu and compares it with the right-hand side
/// rebuilt from the certificate; also checks nonzeroness, r != 0 for
/// vertex certificates, and the cycle definition for cycle certificates.
bool verify_certificate(const Element& x, const ReductionCertificate& cert);

/// `mu=<path> nu=<path> kind=vertex r=<c> v=<id>` or
/// `mu=<path> nu=<path> kind=cycle alpha=<path> coeffs=<m:c,...,n:c>`.
std::string serialize_certificate(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(const Graph& g, const std::string& text);

}  // namespace lpa
