#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ranklens/model.hpp"
#include "ranklens/rp_graph.hpp"

namespace ranklens {

enum class Method { RankOne, ZeroSum, BoundedRank, General };

std::string_view to_string(Method m);

struct RationalizationCertificate {
  BimatrixGame game;
  Method method;
  std::size_t rank = 0;
  std::optional<std::size_t> rank_bound;  // nullopt: no bound claimed
  VerificationReport per_observation;
  bool uniqueness_guarantee = false;
};

// Which player's constraint graph produced a witness cycle.
enum class ConstraintPlayer { Row, Column };

struct RationalizabilityResult {
  bool rationalizable = true;
  ConstraintPlayer player = ConstraintPlayer::Row;
  std::vector<StrategyProfile> cycle;  // empty when rationalizable
};

// Row-player constraint graph: (i,j)->(i',j) for each observation. Column
// player: (i,j')->(i,j). A and B are independent, so the data set is
// rationalizable iff both are acyclic.
RPGraph row_constraint_graph(const DataSet& dataset);
RPGraph column_constraint_graph(const DataSet& dataset);

RationalizabilityResult is_rationalizable(const DataSet& dataset);

// Every subgame must be the full game. Throws SubgameNotFull, NotRationalizable.
RationalizationCertificate rationalize_rank_one(const DataSet& dataset);
// Laminar + uniqueness. Throws NotLaminar, UniquenessViolated.
RationalizationCertificate rationalize_zero_sum(const DataSet& dataset);
// Uniqueness. Throws UniquenessViolated, NotRationalizable.
RationalizationCertificate rationalize_bounded_rank(const DataSet& dataset);
// Throws NotRationalizable.
RationalizationCertificate rationalize_general(const DataSet& dataset);
// Picks the strongest applicable construction. Throws NotRationalizable.
RationalizationCertificate rationalize_auto(const DataSet& dataset);

}  // namespace ranklens
