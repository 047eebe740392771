#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ranklens/model.hpp"

namespace ranklens {

// Row edges join profiles in the same column (the row player's payoff
// strictly decreases along them); column edges join profiles in the same row.
enum class EdgeKind { Row, Column };

std::string_view to_string(EdgeKind kind);

struct RPEdge {
  StrategyProfile from;
  StrategyProfile to;
  EdgeKind kind;

  friend auto operator<=>(const RPEdge&, const RPEdge&) = default;
};

// Result of a cycle search. `cycle` lists the vertices of one directed cycle
// starting at its least vertex; empty when acyclic.
template <typename V>
struct AcyclicityResult {
  bool acyclic = true;
  std::vector<V> cycle;
};

// Revealed-preference graph on the n x n profile grid.
class RPGraph {
 public:
  explicit RPGraph(int n);

  int n() const { return n_; }
  // Throws InternalError if the endpoints violate the coordinate rule for `kind`.
  void add_edge(const RPEdge& e);
  void add_edges(const std::vector<RPEdge>& edges);
  const std::set<RPEdge>& edges() const { return edges_; }
  bool has_edge(const StrategyProfile& from, const StrategyProfile& to) const;

  std::size_t vertex_id(const StrategyProfile& p) const;
  StrategyProfile vertex(std::size_t id) const;

 private:
  int n_;
  std::set<RPEdge> edges_;
};

// Edges an observation forces:
// (i,j)->(i',j) row edges and (i,j')->(i,j) column edges inside the subgame.
std::vector<RPEdge> implement_edges(const Observation& observation);

// Graph with the implement edges of every observation.
RPGraph build_implement_graph(const DataSet& dataset);

// Acyclic graph strongly implementing a laminar data set with the uniqueness
// property whose observed choices are pairwise distinct.
// Throws NotLaminar, UniquenessViolated, NotDeduped.
RPGraph build_strong_laminar_graph(const DataSet& dataset);

AcyclicityResult<StrategyProfile> is_acyclic(const RPGraph& graph);

// Level sweep: every current sink gets the current level, sinks are removed,
// the level increments. A = level, B = -A. Throws CyclicGraph.
BimatrixGame assign_payoffs_topological(const RPGraph& graph);

enum class VertexTag { Intact, Row, Column };

struct SplitVertex {
  int row = 1;
  int col = 1;
  VertexTag tag = VertexTag::Intact;

  friend auto operator<=>(const SplitVertex&, const SplitVertex&) = default;
};

std::string to_string(const SplitVertex& v);

struct SplitEdge {
  SplitVertex from;
  SplitVertex to;
  EdgeKind kind;

  friend auto operator<=>(const SplitEdge&, const SplitEdge&) = default;
};

// Revealed-preference graph where each profile of the split set is replaced
// by a row vertex (row edges only) and a column vertex (column edges only).
class SplitRPGraph {
 public:
  SplitRPGraph(int n, std::set<StrategyProfile> split);

  int n() const { return n_; }
  const std::set<StrategyProfile>& split_set() const { return split_; }
  bool is_split(const StrategyProfile& p) const { return split_.count(p) > 0; }

  // Canonical vertex list: lexicographic by (row, col), R before C.
  const std::vector<SplitVertex>& vertices() const { return vertices_; }
  std::size_t vertex_id(const SplitVertex& v) const;

  // Vertex carrying the given kind of edge at profile p.
  SplitVertex endpoint(const StrategyProfile& p, EdgeKind kind) const;

  // Throws InternalError on coordinate or tag incompatibility.
  void add_edge(const SplitEdge& e);
  const std::set<SplitEdge>& edges() const { return edges_; }

  std::size_t row_span() const;
  std::size_t col_span() const;
  std::size_t span() const { return std::min(row_span(), col_span()); }

 private:
  int n_;
  std::set<StrategyProfile> split_;
  std::vector<SplitVertex> vertices_;
  std::set<SplitEdge> edges_;
};

// Split graph over the crossing choices with the minimal implementing edge
// set. Throws UniquenessViolated.
SplitRPGraph build_split_graph(const DataSet& dataset);

AcyclicityResult<SplitVertex> is_acyclic(const SplitRPGraph& graph);

// Level sweep on the split graph: intact vertices set A = l, B = -l; row
// vertices set only A; column vertices set only B = -l. Throws CyclicGraph.
BimatrixGame assign_payoffs_split(const SplitRPGraph& graph);

std::string to_dot(const RPGraph& graph);
std::string to_dot(const SplitRPGraph& graph);

namespace detail {

// Waves of sinks over vertices 0..count-1; level[v] >= 1. nullopt on a cycle.
std::optional<std::vector<long>> sink_levels(std::size_t count,
                                             const std::vector<std::pair<std::size_t, std::size_t>>& edges);
// One directed cycle, rotated to start at its least vertex; empty if none.
std::vector<std::size_t> find_cycle(std::size_t count,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace detail

}  // namespace ranklens
