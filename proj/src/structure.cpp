#include "ranklens/structure.hpp"

#include <algorithm>
#include <numeric>

namespace ranklens {

bool subgames_cross(const Subgame& s, const Subgame& t) {
  return s.intersects(t) && !s.contains(t) && !t.contains(s);
}

std::set<Subgame> crossing_set(const DataSet& dataset) {
  const auto subgames = dataset.subgames();
  std::set<Subgame> out;
  for (std::size_t a = 0; a < subgames.size(); ++a)
    for (std::size_t b = a + 1; b < subgames.size(); ++b)
      if (subgames_cross(subgames[a], subgames[b])) {
        out.insert(subgames[a]);
        out.insert(subgames[b]);
      }
  return out;
}

bool is_laminar(const DataSet& dataset) {
  const auto subgames = dataset.subgames();
  for (std::size_t a = 0; a < subgames.size(); ++a)
    for (std::size_t b = a + 1; b < subgames.size(); ++b)
      if (subgames_cross(subgames[a], subgames[b])) return false;
  return true;
}

std::set<StrategyProfile> crossing_choices(const DataSet& dataset) {
  const auto crossing = crossing_set(dataset);
  std::set<StrategyProfile> out;
  for (const auto& o : dataset.observations())
    if (crossing.count(o.subgame)) out.insert(o.choice);
  return out;
}

CrossingSpan crossing_span(const DataSet& dataset) {
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& p : crossing_choices(dataset)) {
    rows.insert(p.row);
    cols.insert(p.col);
  }
  return {rows.size(), cols.size(), std::min(rows.size(), cols.size())};
}

UniquenessCheck check_uniqueness(const DataSet& dataset) {
  const auto& obs = dataset.observations();
  for (std::size_t k = 0; k < obs.size(); ++k)
    for (std::size_t l = 0; l < obs.size(); ++l) {
      if (k == l) continue;
      const auto& outer = obs[k];
      const auto& inner = obs[l];
      // Equal subgames are covered here too: each contains the other.
      if (outer.subgame.contains(inner.subgame) && inner.subgame.contains(outer.choice) &&
          inner.choice != outer.choice)
        return {false, std::make_pair(std::min(k, l), std::max(k, l))};
    }
  return {};
}

StructureReport analyze_structure(const DataSet& dataset) {
  StructureReport r;
  r.crossing_subgames = crossing_set(dataset);
  r.laminar = r.crossing_subgames.empty();
  r.uniqueness = satisfies_uniqueness(dataset);
  r.crossing_choices = crossing_choices(dataset);
  const auto span = crossing_span(dataset);
  r.row_span = span.row_span;
  r.col_span = span.col_span;
  r.crossing_span = span.span;
  return r;
}

std::size_t LaminarForest::height() const {
  std::size_t h = 0;
  for (auto r : roots_) h = std::max(h, nodes_[r].height);
  return h;
}

std::optional<std::size_t> LaminarForest::find(const Subgame& s) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (nodes_[k].subgame == s) return k;
  return std::nullopt;
}

std::vector<std::size_t> LaminarForest::row_children(std::size_t node,
                                                     const StrategyProfile& choice) const {
  std::vector<std::size_t> out;
  for (auto c : nodes_[node].children)
    if (nodes_[c].subgame.has_row(choice.row)) out.push_back(c);
  return out;
}

std::vector<std::size_t> LaminarForest::col_children(std::size_t node,
                                                     const StrategyProfile& choice) const {
  std::vector<std::size_t> out;
  for (auto c : nodes_[node].children)
    if (!nodes_[c].subgame.has_row(choice.row)) out.push_back(c);
  return out;
}

std::vector<std::size_t> LaminarForest::bottom_up_order() const {
  std::vector<std::size_t> order(nodes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return nodes_[x].height < nodes_[y].height; });
  return order;
}

LaminarForest laminar_forest(const DataSet& dataset) {
  if (!is_laminar(dataset)) throw Error(ErrorCode::NotLaminar, "data set is not laminar");
  LaminarForest f;
  for (auto& s : dataset.subgames()) f.nodes_.push_back({std::move(s), LaminarForest::kNoParent, {}, 1});
  auto& nodes = f.nodes_;

  // In a laminar family the strict supersets of a grid form a chain, so the
  // parent is the superset of least area.
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    std::size_t best = LaminarForest::kNoParent;
    for (std::size_t w = 0; w < nodes.size(); ++w) {
      if (w == v || !nodes[w].subgame.contains(nodes[v].subgame)) continue;
      if (best == LaminarForest::kNoParent || nodes[w].subgame.area() < nodes[best].subgame.area())
        best = w;
    }
    nodes[v].parent = best;
    if (best == LaminarForest::kNoParent) f.roots_.push_back(v);
    else nodes[best].children.push_back(v);
  }

  // Heights: process by increasing area so children are final before parents.
  std::vector<std::size_t> by_area(nodes.size());
  std::iota(by_area.begin(), by_area.end(), 0);
  std::stable_sort(by_area.begin(), by_area.end(), [&](auto x, auto y) {
    return nodes[x].subgame.area() < nodes[y].subgame.area();
  });
  for (auto v : by_area)
    for (auto c : nodes[v].children) nodes[v].height = std::max(nodes[v].height, nodes[c].height + 1);
  return f;
}

DataSet dedupe_nested(const DataSet& dataset) {
  if (!is_laminar(dataset)) throw Error(ErrorCode::NotLaminar, "data set is not laminar");
  if (!satisfies_uniqueness(dataset))
    throw Error(ErrorCode::UniquenessViolated, "data set violates the uniqueness property");
  DataSet current = dataset;
  for (;;) {
    const auto& obs = current.observations();
    std::optional<std::size_t> drop;
    for (std::size_t k = 0; k < obs.size() && !drop; ++k)
      for (std::size_t l = 0; l < obs.size() && !drop; ++l)
        if (k != l && obs[k].choice == obs[l].choice && obs[k].subgame.contains(obs[l].subgame))
          drop = l;
    if (!drop) return current;
    current = current.without(*drop);
  }
}

}  // namespace ranklens
