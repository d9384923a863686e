#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpa/contraction.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Drinen source vector: a non-negative delay for every vertex and edge,
/// with d(e) <= d(s(e)). Infinite delays appear only through truncation
/// parameters chosen by the caller.
struct DelayVector {
  std::map<std::string, std::uint64_t> vertex_delay;
  std::map<std::string, std::uint64_t> edge_delay;

  /// Validates totality on g and d(e) <= d(s(e)).
  void validate(const Graph& g) const;

  static DelayVector zero(const Graph& g);
  static DelayVector parse(const std::string& text);  // lines: vertex/edge <id> <n>
  std::string serialize() const;
};

struct InDelayResult {
  GraphRef graph;
  /// F-vertex v -> its level-0 copy `v#0`.
  std::map<std::string, std::string> vertex_copy;
};

/// In-delay: vertex v becomes the line v#0 -> v#1 -> ... -> v#d(v) (delay
/// edges `v#e<j>`); each original edge keeps its id, re-sourced at
/// s(e)#d(e) with range r(e)#0.
InDelayResult in_delay(const Graph& F, const DelayVector& d);

struct DesingResult {
  GraphRef graph;
};

/// Truncated Drinen-Tomforde desingularisation. A finite bundle b of
/// multiplicity n expands to parallel edges b_e0..b_e<n-1>. An infinite
/// bundle b : w -> v expands, at truncation depth k, to the edge b_e0
/// (w -> v), new vertices b_1..b_<k-1> with edges b_e<i> (w -> b_i) and
/// chain edges b_f<i> (b_i -> b_<i-1>, b_0 = v). The head the construction
/// would add at a source is deleted.
DesingResult desingularise_truncated(const MultiGraph& F, std::uint64_t depth);

/// Plain truncation of a multigraph: every bundle becomes min(mult, depth)
/// parallel edges b_e0..; the comparison target for desingularisation
/// round trips.
GraphRef truncate_multigraph(const MultiGraph& F, std::uint64_t depth);

struct CollapseResult {
  ContractionResult contraction;
  std::string diagnostics;  // per-vertex entry/exit counts
};

/// Collapses an acyclic segment disjoint from the singular vertices by
/// delegating to contract(E, E^0 \ seg).
CollapseResult collapse_segment(GraphRef E, const std::vector<std::string>& seg,
                                Ring ring);

/// Parameterized finite versions of the paper's three example graphs.
struct Fixture {
  std::string name;
  GraphRef E;                     // the graph to contract
  std::vector<std::string> G0;    // the vertex subset used in the example
  GraphRef expected;              // expected contraction, contraction names
  std::map<std::string, Path> expected_witness;
  GraphRef figure;                // the same graph with figure-style names
  std::map<std::string, std::string> rename;  // contraction ids -> figure ids
};

enum class FixtureName { EX51, EX52, EX53 };

FixtureName parse_fixture_name(const std::string& s);

/// depth >= 2.
Fixture fixture(FixtureName name, std::uint64_t depth);

/// Small auxiliary graphs used across the test suites.
GraphRef single_loop_graph();       // one vertex v, loop a
GraphRef two_parallel_edges_graph();  // w -> v twice (e, f)

std::string serialize_expected_contraction(const Fixture& fx);

}  // namespace lpa
