#include "ranklens/rationalize.hpp"

#include <algorithm>

#include "ranklens/structure.hpp"

namespace ranklens {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::RankOne: return "rank_one";
    case Method::ZeroSum: return "zero_sum";
    case Method::BoundedRank: return "bounded_rank";
    case Method::General: return "general";
  }
  return "unknown";
}

RPGraph row_constraint_graph(const DataSet& dataset) {
  RPGraph g(dataset.n());
  for (const auto& o : dataset.observations())
    for (const auto& e : implement_edges(o))
      if (e.kind == EdgeKind::Row) g.add_edge(e);
  return g;
}

RPGraph column_constraint_graph(const DataSet& dataset) {
  RPGraph g(dataset.n());
  for (const auto& o : dataset.observations())
    for (const auto& e : implement_edges(o))
      if (e.kind == EdgeKind::Column) g.add_edge(e);
  return g;
}

RationalizabilityResult is_rationalizable(const DataSet& dataset) {
  if (auto rows = is_acyclic(row_constraint_graph(dataset)); !rows.acyclic)
    return {false, ConstraintPlayer::Row, std::move(rows.cycle)};
  if (auto cols = is_acyclic(column_constraint_graph(dataset)); !cols.acyclic)
    return {false, ConstraintPlayer::Column, std::move(cols.cycle)};
  return {};
}

namespace {

// Every synthesized game is re-verified before it leaves the library.
RationalizationCertificate certify(BimatrixGame game, const DataSet& dataset, Method method,
                                   std::optional<std::size_t> bound, bool unique) {
  auto report = rationalizes(game, dataset);
  if (!report.rationalizes())
    throw Error(ErrorCode::InternalError,
                std::string(to_string(method)) + " construction failed verification");
  const auto rank = game_rank(game);
  if (bound && rank > *bound)
    throw Error(ErrorCode::InternalError, std::string(to_string(method)) + " rank " +
                                              std::to_string(rank) + " exceeds bound " +
                                              std::to_string(*bound));
  return {std::move(game), method, rank, bound, std::move(report), unique};
}

std::string describe_cycle(const std::vector<StrategyProfile>& cycle) {
  std::string s;
  for (const auto& p : cycle) s += to_string(p) + "->";
  return cycle.empty() ? s : s + to_string(cycle.front());
}

// Relabeling for the rank-one construction: the k-th choice (in sorted order)
// moves to index k, unused indices keep their order after the choices.
std::vector<int> diagonal_relabel(int n, const std::vector<int>& chosen) {
  std::vector<int> label(n + 1, 0);
  int next = 1;
  for (int idx : chosen) label[idx] = next++;
  for (int idx = 1; idx <= n; ++idx)
    if (label[idx] == 0) label[idx] = next++;
  return label;
}

}  // namespace

RationalizationCertificate rationalize_rank_one(const DataSet& dataset) {
  const int n = dataset.n();
  std::vector<int> rows;
  std::vector<int> cols;
  for (const auto& o : dataset.observations()) {
    if (!o.subgame.is_full(n))
      throw Error(ErrorCode::SubgameNotFull,
                  "subgame " + to_string(o.subgame) + " is not the full game");
    rows.push_back(o.choice.row);
    cols.push_back(o.choice.col);
  }
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(rows) || !distinct(cols))
    throw Error(ErrorCode::NotRationalizable,
                "observed choices share a row or column; strict equilibria of one game must "
                "differ in both coordinates");

  const long ell = static_cast<long>(dataset.size());
  const auto row_label = diagonal_relabel(n, rows);
  const auto col_label = diagonal_relabel(n, cols);
  RationalMatrix a(n, n);
  RationalMatrix b(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      const long i = row_label[r];
      const long j = col_label[c];
      if (i <= ell || j <= ell) {
        a(r - 1, c - 1) = 2 * i * j - i * i + j * j;
        b(r - 1, c - 1) = 2 * i * j + i * i - j * j;
      } else {
        a(r - 1, c - 1) = 0;
        b(r - 1, c - 1) = 4 * i * j;
      }
    }
  return certify(BimatrixGame(a, b), dataset, Method::RankOne, 1, true);
}

RationalizationCertificate rationalize_zero_sum(const DataSet& dataset) {
  const auto reduced = dedupe_nested(dataset);
  const auto graph = build_strong_laminar_graph(reduced);
  auto game = assign_payoffs_topological(graph);
  return certify(std::move(game), dataset, Method::ZeroSum, 0, true);
}

RationalizationCertificate rationalize_bounded_rank(const DataSet& dataset) {
  const auto graph = build_split_graph(dataset);
  if (auto check = is_acyclic(graph); !check.acyclic) {
    std::string path;
    for (const auto& v : check.cycle) path += "(" + to_string(v) + ")->";
    throw Error(ErrorCode::NotRationalizable,
                "split revealed-preference graph has a cycle " + path + "...");
  }
  const auto bound = crossing_span(dataset).span;
  auto game = assign_payoffs_split(graph);
  return certify(std::move(game), dataset, Method::BoundedRank, bound, false);
}

RationalizationCertificate rationalize_general(const DataSet& dataset) {
  if (auto r = is_rationalizable(dataset); !r.rationalizable)
    throw Error(ErrorCode::NotRationalizable,
                std::string(r.player == ConstraintPlayer::Row ? "row" : "column") +
                    " player constraints contain the cycle " + describe_cycle(r.cycle));
  const auto rows = assign_payoffs_topological(row_constraint_graph(dataset));
  const auto cols = assign_payoffs_topological(column_constraint_graph(dataset));
  // cols.b() holds -level, which orders column-player payoffs correctly.
  RationalMatrix a = rows.a();
  RationalMatrix b = cols.b();
  return certify(BimatrixGame(std::move(a), std::move(b)), dataset, Method::General, std::nullopt,
                 false);
}

RationalizationCertificate rationalize_auto(const DataSet& dataset) {
  const bool all_full = std::all_of(dataset.observations().begin(), dataset.observations().end(),
                                    [&](const auto& o) { return o.subgame.is_full(dataset.n()); });
  if (all_full) return rationalize_rank_one(dataset);
  const bool unique = satisfies_uniqueness(dataset);
  if (unique && is_laminar(dataset)) return rationalize_zero_sum(dataset);
  if (unique) return rationalize_bounded_rank(dataset);
  return rationalize_general(dataset);
}

}  // namespace ranklens
