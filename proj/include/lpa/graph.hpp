#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

/// Directed edge. `src` = s(e), `rng` = r(e); an edge line `e : a -> b`
/// means s(e) = a, r(e) = b (arrowheads denote range).
struct Edge {
  std::string id;
  std::string src;
  std::string rng;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed graph with named vertices and edges. Immutable after
/// construction; identifier sets are kept sorted so every iteration order
/// in the toolkit is deterministic.
class Graph {
 public:
  /// Validates identifiers (charset, uniqueness, endpoint membership) and
  /// builds the adjacency indices. Throws lpa::Error on violation.
  static Graph make(std::string name, std::vector<std::string> vertices,
                    std::vector<Edge> edges);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& v) const;
  bool has_edge(const std::string& e) const;
  const Edge& edge(const std::string& e) const;

  /// r^{-1}(v) as sorted edge ids. Throws on unknown vertex.
  const std::vector<std::string>& in_edges(const std::string& v) const;
  /// s^{-1}(v) as sorted edge ids. Throws on unknown vertex.
  const std::vector<std::string>& out_edges(const std::string& v) const;

  /// The designated edge used to orient the (L3) rewrite at v: the
  /// lexicographically smallest id in r^{-1}(v). Empty optional when v is
  /// a source.
  std::optional<std::string> special_in_edge(const std::string& v) const;

  Graph with_name(std::string name) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::string name_;
  std::vector<std::string> vertices_;  // sorted
  std::vector<Edge> edges_;            // sorted by id
  std::map<std::string, Edge> edge_by_id_;
  std::map<std::string, std::vector<std::string>> in_by_vertex_;
  std::map<std::string, std::vector<std::string>> out_by_vertex_;
};

using GraphRef = std::shared_ptr<const Graph>;

GraphRef make_graph(std::string name, std::vector<std::string> vertices,
                    std::vector<Edge> edges);

/// True for identifiers accepted in graph/expression files:
/// nonempty, over [A-Za-z0-9_#.], not starting with '.'.
bool valid_identifier(const std::string& id);

/// Finite path under the composition convention s(mu_i) = r(mu_{i+1}):
/// edges[0] sits at the *range* end and edges.back() at the *source* end.
/// A length-0 path is a vertex; `anchor` then names it. For nonempty paths
/// `anchor` is kept equal to the source vertex, so default comparison is
/// consistent.
struct Path {
  std::vector<std::string> edges;
  std::string anchor;

  static Path vertex(std::string v) { return Path{{}, std::move(v)}; }
  /// Validates edge existence and the composition rule against g.
  static Path make(const Graph& g, std::vector<std::string> edge_ids);

  std::size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  /// r(mu): range of the first edge, or the anchor.
  std::string range(const Graph& g) const;
  /// s(mu): source of the last edge, or the anchor.
  const std::string& source() const { return anchor; }

  /// Interior source vertices s(mu_i) for 1 <= i < |mu| (empty for
  /// lengths 0 and 1).
  std::vector<std::string> interior_sources(const Graph& g) const;

  bool valid_in(const Graph& g) const;

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// mu followed by nu; requires s(mu) = r(nu).
Path concat(const Graph& g, const Path& mu, const Path& nu);

std::string path_to_string(const Path& p);  // dot-joined ids; vertex id when empty

/// Graph plus edge bundles carrying a multiplicity (finite n >= 1, or
/// infinite). Infinite receivers exist only at this sketch level; every
/// algebra computation goes through finite truncations.
struct Bundle {
  std::string id;
  std::string src;
  std::string rng;
  std::optional<std::uint64_t> multiplicity;  // nullopt = infinite

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

struct MultiGraph {
  Graph base;
  std::vector<Bundle> bundles;  // sorted by id

  static MultiGraph make(Graph base, std::vector<Bundle> bundles);
};

// ---------------------------------------------------------------------------
// Operations

std::vector<std::string> singular_vertices(const Graph& g);

struct AcyclicResult {
  bool acyclic = true;
  std::optional<Path> witness;  // one cycle when !acyclic
};

/// Acyclicity of the subgraph induced by vs (edges with both endpoints in
/// vs). A cycle is a path alpha with s(alpha) = r(alpha) and pairwise
/// distinct s(alpha_i).
AcyclicResult is_acyclic(const Graph& g, const std::vector<std::string>& vs);

/// True iff p is a cycle in g per the definition above.
bool is_cycle(const Graph& g, const Path& p);

/// Least fixpoint of the hereditary rule alone: v in H, r(e) = v implies
/// s(e) in H.
std::vector<std::string> hereditary_closure(const Graph& g,
                                            const std::vector<std::string>& V);

/// Least fixpoint of the hereditary rule plus saturation: if v has
/// 0 < |r^{-1}(v)| < inf and s(r^{-1}(v)) is contained in H then v in H.
std::vector<std::string> saturated_hereditary_closure(
    const Graph& g, const std::vector<std::string>& V);

bool is_saturated_hereditary(const Graph& g, const std::vector<std::string>& H);

/// Lemma-level fullness test: SigmaH(V) = E^0.
bool is_full(const Graph& g, const std::vector<std::string>& V);

/// Graph on vertices() \ H with the edges whose source lies outside H.
/// H must be saturated hereditary (checked); hereditarity then guarantees
/// no retained edge has its range in H.
Graph quotient_graph(const Graph& g, const std::vector<std::string>& H);

struct PathFilter {
  std::optional<std::set<std::string>> range_in;
  std::optional<std::set<std::string>> source_in;
  std::optional<std::set<std::string>> interior_in;  // constrains s(mu_i), i < |mu|
  std::size_t min_len = 0;
};

/// All paths with min_len <= |mu| <= max_len matching the filter, in
/// (length, lexicographic) order. Duplicate-free.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len,
                                  const PathFilter& filter = {});

/// Renaming verification (not isomorphism search): true iff `rename`,
/// which must be total on g1's vertices and edges, is a bijective graph
/// morphism onto g2 preserving src/rng. Graph names are ignored.
/// Throws when the map is not total or not bijective onto g2's ids.
bool canonical_isomorphic(const Graph& g1, const Graph& g2,
                          const std::map<std::string, std::string>& rename);

}  // namespace lpa
