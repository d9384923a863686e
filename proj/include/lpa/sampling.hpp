#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/rng.hpp"

namespace lpa {

/// Seeded generators for paths, monomials and elements. All draws come
/// from lpa::Rng, so every sweep is reproducible from its seed.
struct Sampler {
  GraphRef g;
  Ring ring;
  Rng rng;

  Sampler(GraphRef graph, Ring r, std::uint64_t seed)
      : g(std::move(graph)), ring(r), rng(seed) {}

  std::int64_t coefficient();

  /// Random path with source `from` (grown at the range end), length <=
  /// max_len.
  Path path_from(const std::string& from, std::size_t max_len);

  /// Random path with |mu| <= max_len and r(mu) in `ranges` (grown at the
  /// source end from a range vertex). Returns nullopt if `ranges` is empty.
  std::optional<Path> path_into(const std::set<std::string>& ranges,
                                std::size_t max_len);

  /// Random basis-shaped monomial pair (mu, nu) with a common junction.
  std::pair<Path, Path> monomial_paths(std::size_t max_len);

  /// Random element with <= max_terms terms and path lengths <= max_len.
  /// May normalize to fewer terms or to zero.
  Element element(std::size_t max_terms, std::size_t max_len);

  /// As element(), retrying until nonzero (throws after too many attempts,
  /// which cannot happen on a nonempty graph).
  Element nonzero_element(std::size_t max_terms, std::size_t max_len);

  /// Random element of M: every term's r(mu) lies in V.
  Element element_in_M(const std::set<std::string>& V, std::size_t max_terms,
                       std::size_t max_len);
  /// Random element of MM*: both term ranges lie in V.
  Element element_in_MMstar(const std::set<std::string>& V,
                            std::size_t max_terms, std::size_t max_len);
};

/// Seeded random graph family used by the closure and Morita sweeps:
/// up to max_vertices vertices (>= 1) and up to max_edges edges.
GraphRef random_graph(Rng& rng, std::size_t max_vertices,
                      std::size_t max_edges, const std::string& name);

}  // namespace lpa
