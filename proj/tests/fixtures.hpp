#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ranklens/model.hpp"
#include "ranklens/structure.hpp"

namespace ranklens::testing {

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

inline Observation obs(int i, int j, std::vector<int> rows, std::vector<int> cols, int n) {
  return {{i, j}, Subgame::make(std::move(rows), std::move(cols), n)};
}

inline RationalMatrix mat(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

// {((1,1),[2],[2]), ((2,2),[2],[2])}
inline DataSet diagonal_pair() { return make_dataset(2, {obs(1, 1, {1, 2}, {1, 2}, 2), obs(2, 2, {1, 2}, {1, 2}, 2)}); }

// (1,1) beats (2,1) for the row player in one subgame and loses to it in the other.
inline DataSet refuted_pair() {
  return make_dataset(2, {obs(1, 1, {1, 2}, {1, 2}, 2), obs(2, 1, {1, 2}, {1}, 2)});
}

inline BimatrixGame rank_one_example() { return BimatrixGame(mat({{2, 7}, {1, 8}}), mat({{2, 1}, {7, 8}})); }

// {((2,2),{1,2}x{2}), ((2,2),{2}x{1,2})}: two crossing strips sharing a choice.
inline DataSet two_strips() {
  return make_dataset(2, {obs(2, 2, {1, 2}, {2}, 2), obs(2, 2, {2}, {1, 2}, 2)});
}

inline std::vector<int> random_subset(std::mt19937& rng, const std::vector<int>& from, std::size_t k) {
  std::vector<int> v = from;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(k);
  std::sort(v.begin(), v.end());
  return v;
}

// Splits `idx` into a random number of nonempty contiguous-in-shuffle groups.
inline std::vector<std::vector<int>> random_partition(std::mt19937& rng, std::vector<int> idx) {
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<std::vector<int>> groups;
  std::size_t pos = 0;
  while (pos < idx.size()) {
    const std::size_t len =
        std::uniform_int_distribution<std::size_t>(1, idx.size() - pos)(rng);
    std::vector<int> g(idx.begin() + pos, idx.begin() + pos + len);
    std::sort(g.begin(), g.end());
    groups.push_back(std::move(g));
    pos += len;
  }
  return groups;
}

namespace detail {

inline void grow_laminar(std::mt19937& rng, int n, const Subgame& sub, StrategyProfile choice,
                         int depth, std::vector<Observation>& out) {
  out.push_back({choice, sub});
  if (depth == 0 || sub.area() == 1) return;
  // Products of row-partition and column-partition cells are pairwise disjoint.
  const auto row_groups = random_partition(rng, sub.rows());
  const auto col_groups = random_partition(rng, sub.cols());
  std::bernoulli_distribution keep(0.45);
  for (const auto& rg : row_groups)
    for (const auto& cg : col_groups) {
      if (!keep(rng)) continue;
      auto child = Subgame::make(rg, cg, n);
      if (child == sub) continue;
      StrategyProfile c;
      if (child.contains(choice)) {
        c = choice;  // uniqueness forces the parent's choice
      } else {
        c = {child.rows()[std::uniform_int_distribution<std::size_t>(0, rg.size() - 1)(rng)],
             child.cols()[std::uniform_int_distribution<std::size_t>(0, cg.size() - 1)(rng)]};
      }
      grow_laminar(rng, n, child, c, depth - 1, out);
    }
}

}  // namespace detail

// Random laminar data set with the uniqueness property on n <= max_n.
inline DataSet random_laminar_unique(std::mt19937& rng, int max_n = 8) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  std::vector<Observation> out;
  // Either one random root grid or several disjoint top-level grids.
  const auto row_groups = random_partition(rng, range(1, n));
  const auto col_groups = random_partition(rng, range(1, n));
  std::bernoulli_distribution keep(0.6);
  bool any = false;
  for (const auto& rg : row_groups)
    for (const auto& cg : col_groups) {
      if (!keep(rng) && any) continue;
      any = true;
      auto root = Subgame::make(rg, cg, n);
      StrategyProfile c{rg[std::uniform_int_distribution<std::size_t>(0, rg.size() - 1)(rng)],
                        cg[std::uniform_int_distribution<std::size_t>(0, cg.size() - 1)(rng)]};
      detail::grow_laminar(rng, n, root, c, std::uniform_int_distribution<int>(0, 4)(rng), out);
    }
  return make_dataset(n, std::move(out));
}

inline RationalMatrix random_int_matrix(std::mt19937& rng, int n, int lo, int hi) {
  RationalMatrix m(n, n);
  std::uniform_int_distribution<int> d(lo, hi);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

inline Subgame random_subgame(std::mt19937& rng, int n, int max_side) {
  const auto side = [&] { return std::uniform_int_distribution<int>(1, std::min(n, max_side))(rng); };
  return Subgame::make(random_subset(rng, range(1, n), side()), random_subset(rng, range(1, n), side()), n);
}

// Uniqueness data set drawn from subgames with a unique strict equilibrium in
// a hidden random game; hence rationalizable by construction.
inline DataSet random_unique_from_game(std::mt19937& rng, int max_n = 8) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  const BimatrixGame hidden(random_int_matrix(rng, n, -20, 20), random_int_matrix(rng, n, -20, 20));
  const int want = std::uniform_int_distribution<int>(1, 3 * n)(rng);
  std::vector<Observation> out;
  for (int tries = 0; tries < 40 * want && static_cast<int>(out.size()) < want; ++tries) {
    const auto sub = random_subgame(rng, n, 3);
    const auto eq = strict_equilibria(hidden, sub);
    if (eq.size() == 1) out.push_back({*eq.begin(), sub});
  }
  if (out.empty()) out.push_back({{1, 1}, Subgame::make({1}, {1}, n)});
  return make_dataset(n, std::move(out));
}

// Random small data set with arbitrary choices (may be anything).
inline DataSet random_dataset(std::mt19937& rng, int n, int count, int max_side) {
  std::vector<Observation> out;
  for (int k = 0; k < count; ++k) {
    const auto sub = random_subgame(rng, n, max_side);
    out.push_back({{random_subset(rng, sub.rows(), 1)[0], random_subset(rng, sub.cols(), 1)[0]}, sub});
  }
  return make_dataset(n, std::move(out));
}

}  // namespace ranklens::testing
