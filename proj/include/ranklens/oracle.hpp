#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "ranklens/model.hpp"

namespace ranklens {

struct SearchConfig {
  int max_abs_payoff = 3;  // entries range over [-M, M]
  int max_n = 2;
  // Upper limit on (2M+1)^(2 n^2), the size of the joint payoff space.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Minimum rank of A+B over integer games with entries in [-M, M] that
// rationalize the data set; nullopt when none exists in the box.
// Throws InvalidSize (M < 1), SizeLimitExceeded (n > max_n), BudgetExceeded.
std::optional<std::size_t> brute_force_min_rank(const DataSet& dataset,
                                                const SearchConfig& config = {});

// A zero-sum rationalization exists iff the implement-edge graph is acyclic.
bool zero_sum_feasible(const DataSet& dataset);

std::map<Subgame, std::set<StrategyProfile>> all_subgame_equilibria(const BimatrixGame& game,
                                                                    const DataSet& dataset);

}  // namespace ranklens
