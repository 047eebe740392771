#include "ranklens/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ranklens/rp_graph.hpp"

namespace ranklens {

namespace {

using IntGrid = std::vector<int>;  // row-major n x n

struct Constraint {
  int better;  // flat index that must be strictly larger
  int worse;
};

// Strict inequalities each player's payoffs must satisfy, as flat indices.
void collect_constraints(const DataSet& d, std::vector<Constraint>& row,
                         std::vector<Constraint>& col) {
  const int n = d.n();
  auto at = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (const auto& o : d.observations()) {
    const auto [i, j] = o.choice;
    for (int r : o.subgame.rows())
      if (r != i) row.push_back({at(i, j), at(r, j)});
    for (int c : o.subgame.cols())
      if (c != j) col.push_back({at(i, j), at(i, c)});
  }
}

std::vector<IntGrid> feasible_grids(int cells, int m, const std::vector<Constraint>& cons) {
  std::vector<IntGrid> out;
  IntGrid g(cells, -m);
  for (;;) {
    bool ok = true;
    for (const auto& c : cons)
      if (g[c.better] <= g[c.worse]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
    int k = 0;
    while (k < cells && g[k] == m) g[k++] = -m;
    if (k == cells) break;
    ++g[k];
  }
  return out;
}

// Rank of a small integer matrix by fraction-free elimination in 64-bit.
std::size_t small_rank(std::vector<std::int64_t> z, int n) {
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (int k = 0; k < n && static_cast<int>(rank) < n; ++k) {
    int p = static_cast<int>(rank);
    while (p < n && z[p * n + k] == 0) ++p;
    if (p == n) continue;
    const int r0 = static_cast<int>(rank);
    if (p != r0)
      for (int c = 0; c < n; ++c) std::swap(z[p * n + c], z[r0 * n + c]);
    for (int r = r0 + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c)
        z[r * n + c] = (z[r0 * n + k] * z[r * n + c] - z[r * n + k] * z[r0 * n + c]) / prev;
      z[r * n + k] = 0;
    }
    prev = z[r0 * n + k];
    ++rank;
  }
  return rank;
}

struct GridHash {
  std::size_t operator()(const IntGrid& g) const {
    std::size_t h = 0;
    for (int v : g) h = h * 31 + static_cast<std::size_t>(v + 1024);
    return h;
  }
};

}  // namespace

std::optional<std::size_t> brute_force_min_rank(const DataSet& dataset, const SearchConfig& config) {
  const int n = dataset.n();
  const int m = config.max_abs_payoff;
  if (m < 1) throw Error(ErrorCode::InvalidSize, "max_abs_payoff must be at least 1");
  if (n > config.max_n)
    throw Error(ErrorCode::SizeLimitExceeded, "brute force is capped at n = " +
                                                  std::to_string(config.max_n));
  const int cells = n * n;
  std::uint64_t space = 1;
  for (int k = 0; k < 2 * cells; ++k) {
    space *= static_cast<std::uint64_t>(2 * m + 1);
    if (space > config.budget)
      throw Error(ErrorCode::BudgetExceeded, "search space exceeds budget of " +
                                                 std::to_string(config.budget));
  }

  std::vector<Constraint> row_cons;
  std::vector<Constraint> col_cons;
  collect_constraints(dataset, row_cons, col_cons);
  // The two players' constraints are independent, so enumerate each side once
  // and pair them up.
  const auto as = feasible_grids(cells, m, row_cons);
  const auto bs = feasible_grids(cells, m, col_cons);
  if (as.empty() || bs.empty()) return std::nullopt;

  std::unordered_set<IntGrid, GridHash> negated_b;
  for (const auto& b : bs) {
    IntGrid neg(b.size());
    std::transform(b.begin(), b.end(), neg.begin(), [](int v) { return -v; });
    negated_b.insert(std::move(neg));
  }
  for (const auto& a : as)
    if (negated_b.count(a)) return 0;

  // Rank >= 1 from here; scan pairs in parallel, stopping once a rank-1 pair
  // is known. The minimum does not depend on how the A-list is partitioned.
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 16);
  std::atomic<std::size_t> best{static_cast<std::size_t>(n)};
  auto worker = [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> sum(cells);
    for (std::size_t ia = begin; ia < end && best.load() > 1; ++ia)
      for (const auto& b : bs) {
        for (int k = 0; k < cells; ++k) sum[k] = as[ia][k] + b[k];
        const auto r = small_rank(sum, n);
        auto cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        if (best.load() <= 1) break;
      }
  };
  std::vector<std::thread> pool;
  const std::size_t chunk = (as.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(as.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(worker, begin, end);
  }
  for (auto& th : pool) th.join();
  return best.load();
}

bool zero_sum_feasible(const DataSet& dataset) {
  return is_acyclic(build_implement_graph(dataset)).acyclic;
}

std::map<Subgame, std::set<StrategyProfile>> all_subgame_equilibria(const BimatrixGame& game,
                                                                    const DataSet& dataset) {
  if (game.n() != dataset.n()) throw Error(ErrorCode::SizeMismatch, "game and data set sizes differ");
  std::map<Subgame, std::set<StrategyProfile>> out;
  for (const auto& s : dataset.subgames()) out.emplace(s, strict_equilibria(game, s));
  return out;
}

}  // namespace ranklens
