#include "ranklens/rp_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ranklens/structure.hpp"

namespace ranklens {

std::string_view to_string(EdgeKind kind) { return kind == EdgeKind::Row ? "row" : "col"; }

namespace detail {

std::optional<std::vector<long>> sink_levels(
    std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> out_degree(count, 0);
  std::vector<std::vector<std::size_t>> predecessors(count);
  for (const auto& [from, to] : edges) {
    ++out_degree[from];
    predecessors[to].push_back(from);
  }
  std::vector<long> level(count, 0);
  std::vector<std::size_t> wave;
  for (std::size_t v = 0; v < count; ++v)
    if (out_degree[v] == 0) wave.push_back(v);
  std::size_t assigned = 0;
  for (long l = 1; !wave.empty(); ++l) {
    std::vector<std::size_t> next;
    for (auto v : wave) {
      level[v] = l;
      ++assigned;
      for (auto u : predecessors[v])
        if (--out_degree[u] == 0) next.push_back(u);
    }
    std::sort(next.begin(), next.end());
    wave = std::move(next);
  }
  if (assigned != count) return std::nullopt;
  return level;
}

std::vector<std::size_t> find_cycle(std::size_t count,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(count);
  for (const auto& [from, to] : edges) adj[from].push_back(to);
  for (auto& a : adj) std::sort(a.begin(), a.end());

  enum Color : unsigned char { White, Gray, Black };
  std::vector<Color> color(count, White);
  std::vector<std::size_t> stack;           // current DFS path
  std::vector<std::size_t> next_child;      // per path entry
  for (std::size_t root = 0; root < count; ++root) {
    if (color[root] != White) continue;
    stack = {root};
    next_child = {0};
    color[root] = Gray;
    while (!stack.empty()) {
      const auto v = stack.back();
      if (next_child.back() == adj[v].size()) {
        color[v] = Black;
        stack.pop_back();
        next_child.pop_back();
        continue;
      }
      const auto w = adj[v][next_child.back()++];
      if (color[w] == Gray) {
        auto start = std::find(stack.begin(), stack.end(), w);
        std::vector<std::size_t> cycle(start, stack.end());
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        return cycle;
      }
      if (color[w] == White) {
        color[w] = Gray;
        stack.push_back(w);
        next_child.push_back(0);
      }
    }
  }
  return {};
}

}  // namespace detail

RPGraph::RPGraph(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
}

void RPGraph::add_edge(const RPEdge& e) {
  const bool same_row = e.from.row == e.to.row;
  const bool same_col = e.from.col == e.to.col;
  const bool ok = e.kind == EdgeKind::Row ? (same_col && !same_row) : (same_row && !same_col);
  if (!ok || e.from.row < 1 || e.from.row > n_ || e.from.col < 1 || e.from.col > n_ ||
      e.to.row < 1 || e.to.row > n_ || e.to.col < 1 || e.to.col > n_)
    throw Error(ErrorCode::InternalError, "malformed " + std::string(to_string(e.kind)) +
                                              " edge " + to_string(e.from) + "->" +
                                              to_string(e.to));
  edges_.insert(e);
}

void RPGraph::add_edges(const std::vector<RPEdge>& edges) {
  for (const auto& e : edges) add_edge(e);
}

bool RPGraph::has_edge(const StrategyProfile& from, const StrategyProfile& to) const {
  const auto kind = from.col == to.col ? EdgeKind::Row : EdgeKind::Column;
  return edges_.count({from, to, kind}) > 0;
}

std::size_t RPGraph::vertex_id(const StrategyProfile& p) const {
  return static_cast<std::size_t>(p.row - 1) * n_ + static_cast<std::size_t>(p.col - 1);
}

StrategyProfile RPGraph::vertex(std::size_t id) const {
  return {static_cast<int>(id / n_) + 1, static_cast<int>(id % n_) + 1};
}

std::vector<RPEdge> implement_edges(const Observation& observation) {
  const auto [i, j] = observation.choice;
  std::vector<RPEdge> out;
  for (int r : observation.subgame.rows())
    if (r != i) out.push_back({{i, j}, {r, j}, EdgeKind::Row});
  for (int c : observation.subgame.cols())
    if (c != j) out.push_back({{i, c}, {i, j}, EdgeKind::Column});
  return out;
}

RPGraph build_implement_graph(const DataSet& dataset) {
  RPGraph g(dataset.n());
  for (const auto& o : dataset.observations()) g.add_edges(implement_edges(o));
  return g;
}

RPGraph build_strong_laminar_graph(const DataSet& dataset) {
  if (!is_laminar(dataset)) throw Error(ErrorCode::NotLaminar, "data set is not laminar");
  if (!satisfies_uniqueness(dataset))
    throw Error(ErrorCode::UniquenessViolated, "data set violates the uniqueness property");
  std::set<StrategyProfile> seen;
  std::map<Subgame, StrategyProfile> choice_of;
  for (const auto& o : dataset.observations()) {
    if (!seen.insert(o.choice).second)
      throw Error(ErrorCode::NotDeduped,
                  "choice " + to_string(o.choice) + " observed twice; apply dedupe_nested first");
    choice_of[o.subgame] = o.choice;
  }

  const auto forest = laminar_forest(dataset);
  RPGraph g(dataset.n());
  for (auto v : forest.bottom_up_order()) {
    const auto& node = forest.nodes()[v];
    const auto& sub = node.subgame;
    const auto choice = choice_of.at(sub);
    const auto [r, c] = choice;

    g.add_edges(implement_edges({choice, sub}));

    std::set<StrategyProfile> row_side;  // children holding the choice row
    std::set<StrategyProfile> col_side;  // the other children
    for (auto child : forest.row_children(v, choice))
      for (int a : forest.nodes()[child].subgame.rows())
        for (int b : forest.nodes()[child].subgame.cols()) row_side.insert({a, b});
    for (auto child : forest.col_children(v, choice))
      for (int a : forest.nodes()[child].subgame.rows())
        for (int b : forest.nodes()[child].subgame.cols()) col_side.insert({a, b});

    // Row-side cells point at the choice column.
    for (const auto& p : row_side) {
      if (p.col == c)
        throw Error(ErrorCode::InternalError, "row-side child contains the observed choice");
      g.add_edge({p, {p.row, c}, EdgeKind::Column});
    }
    // Every other cell is beaten by the choice row.
    for (int a : sub.rows())
      for (int b : sub.cols()) {
        const StrategyProfile p{a, b};
        if (a == r || row_side.count(p)) continue;
        if (b == c && !col_side.count(p)) continue;  // choice column outside child grids
        g.add_edge({{r, b}, p, EdgeKind::Row});
      }
  }
  return g;
}

namespace {

template <typename Graph, typename EdgeSet>
std::vector<std::pair<std::size_t, std::size_t>> id_edges(const Graph& g, const EdgeSet& edges) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(g.vertex_id(e.from), g.vertex_id(e.to));
  return out;
}

}  // namespace

AcyclicityResult<StrategyProfile> is_acyclic(const RPGraph& graph) {
  const std::size_t count = static_cast<std::size_t>(graph.n()) * graph.n();
  const auto cycle = detail::find_cycle(count, id_edges(graph, graph.edges()));
  AcyclicityResult<StrategyProfile> r;
  r.acyclic = cycle.empty();
  for (auto id : cycle) r.cycle.push_back(graph.vertex(id));
  return r;
}

BimatrixGame assign_payoffs_topological(const RPGraph& graph) {
  const int n = graph.n();
  const auto levels =
      detail::sink_levels(static_cast<std::size_t>(n) * n, id_edges(graph, graph.edges()));
  if (!levels) throw Error(ErrorCode::CyclicGraph, "revealed-preference graph has a cycle");
  RationalMatrix a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = (*levels)[graph.vertex_id({i, j})];
  return BimatrixGame(a, -a);
}

std::string to_string(const SplitVertex& v) {
  std::string s = std::to_string(v.row) + "," + std::to_string(v.col);
  if (v.tag == VertexTag::Row) s += ",R";
  if (v.tag == VertexTag::Column) s += ",C";
  return s;
}

SplitRPGraph::SplitRPGraph(int n, std::set<StrategyProfile> split) : n_(n), split_(std::move(split)) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (split_.count({i, j})) {
        vertices_.push_back({i, j, VertexTag::Row});
        vertices_.push_back({i, j, VertexTag::Column});
      } else {
        vertices_.push_back({i, j, VertexTag::Intact});
      }
    }
}

std::size_t SplitRPGraph::vertex_id(const SplitVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw Error(ErrorCode::InternalError, "no vertex " + to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

SplitVertex SplitRPGraph::endpoint(const StrategyProfile& p, EdgeKind kind) const {
  if (!is_split(p)) return {p.row, p.col, VertexTag::Intact};
  return {p.row, p.col, kind == EdgeKind::Row ? VertexTag::Row : VertexTag::Column};
}

void SplitRPGraph::add_edge(const SplitEdge& e) {
  const bool same_row = e.from.row == e.to.row;
  const bool same_col = e.from.col == e.to.col;
  bool ok = e.kind == EdgeKind::Row ? (same_col && !same_row) : (same_row && !same_col);
  const auto forbidden = e.kind == EdgeKind::Row ? VertexTag::Column : VertexTag::Row;
  ok = ok && e.from.tag != forbidden && e.to.tag != forbidden;
  if (!ok)
    throw Error(ErrorCode::InternalError, "malformed split edge " + to_string(e.from) + "->" +
                                              to_string(e.to));
  vertex_id(e.from);
  vertex_id(e.to);
  edges_.insert(e);
}

std::size_t SplitRPGraph::row_span() const {
  std::set<int> rows;
  for (const auto& p : split_) rows.insert(p.row);
  return rows.size();
}

std::size_t SplitRPGraph::col_span() const {
  std::set<int> cols;
  for (const auto& p : split_) cols.insert(p.col);
  return cols.size();
}

SplitRPGraph build_split_graph(const DataSet& dataset) {
  if (!satisfies_uniqueness(dataset))
    throw Error(ErrorCode::UniquenessViolated, "data set violates the uniqueness property");
  SplitRPGraph g(dataset.n(), crossing_choices(dataset));
  for (const auto& o : dataset.observations())
    for (const auto& e : implement_edges(o))
      g.add_edge({g.endpoint(e.from, e.kind), g.endpoint(e.to, e.kind), e.kind});
  return g;
}

AcyclicityResult<SplitVertex> is_acyclic(const SplitRPGraph& graph) {
  const auto cycle = detail::find_cycle(graph.vertices().size(), id_edges(graph, graph.edges()));
  AcyclicityResult<SplitVertex> r;
  r.acyclic = cycle.empty();
  for (auto id : cycle) r.cycle.push_back(graph.vertices()[id]);
  return r;
}

BimatrixGame assign_payoffs_split(const SplitRPGraph& graph) {
  const int n = graph.n();
  const auto levels = detail::sink_levels(graph.vertices().size(), id_edges(graph, graph.edges()));
  if (!levels) throw Error(ErrorCode::CyclicGraph, "split revealed-preference graph has a cycle");
  RationalMatrix a(n, n, 0);
  RationalMatrix b(n, n, 0);
  for (std::size_t id = 0; id < graph.vertices().size(); ++id) {
    const auto& v = graph.vertices()[id];
    const long l = (*levels)[id];
    if (v.tag != VertexTag::Column) a(v.row - 1, v.col - 1) = l;
    if (v.tag != VertexTag::Row) b(v.row - 1, v.col - 1) = -l;
  }
  return BimatrixGame(a, b);
}

std::string to_dot(const RPGraph& graph) {
  std::ostringstream os;
  os << "digraph rp {\n";
  for (int i = 1; i <= graph.n(); ++i)
    for (int j = 1; j <= graph.n(); ++j) os << "  \"" << i << "," << j << "\";\n";
  for (const auto& e : graph.edges())
    os << "  \"" << e.from.row << "," << e.from.col << "\" -> \"" << e.to.row << "," << e.to.col
       << "\" [kind=" << to_string(e.kind) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const SplitRPGraph& graph) {
  std::ostringstream os;
  os << "digraph split_rp {\n";
  for (const auto& v : graph.vertices()) os << "  \"" << to_string(v) << "\";\n";
  for (const auto& e : graph.edges())
    os << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to)
       << "\" [kind=" << to_string(e.kind) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ranklens
