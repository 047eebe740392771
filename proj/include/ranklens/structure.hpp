#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ranklens/model.hpp"

namespace ranklens {

// True iff the grids intersect and neither contains the other.
bool subgames_cross(const Subgame& s, const Subgame& t);

// Subgames of the data set crossing at least one other subgame of it.
std::set<Subgame> crossing_set(const DataSet& dataset);

bool is_laminar(const DataSet& dataset);

struct CrossingSpan {
  std::size_t row_span = 0;
  std::size_t col_span = 0;
  std::size_t span = 0;  // min(row_span, col_span)
};

// Observed choices of the crossing subgames.
std::set<StrategyProfile> crossing_choices(const DataSet& dataset);
CrossingSpan crossing_span(const DataSet& dataset);

struct UniquenessCheck {
  bool holds = true;
  // First offending pair of observations (indices into dataset.observations()).
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

UniquenessCheck check_uniqueness(const DataSet& dataset);
inline bool satisfies_uniqueness(const DataSet& dataset) { return check_uniqueness(dataset).holds; }

struct StructureReport {
  bool laminar = true;
  bool uniqueness = true;
  std::set<Subgame> crossing_subgames;
  std::set<StrategyProfile> crossing_choices;
  std::size_t row_span = 0;
  std::size_t col_span = 0;
  std::size_t crossing_span = 0;
};

StructureReport analyze_structure(const DataSet& dataset);

// Containment forest over the distinct subgames of a laminar data set. Roots
// hang off an implicit virtual root.
class LaminarForest {
 public:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  struct Node {
    Subgame subgame;
    std::size_t parent = kNoParent;
    std::vector<std::size_t> children;
    std::size_t height = 1;  // leaves have height 1
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::size_t>& roots() const { return roots_; }
  // Height of the tallest tree; 0 for an empty forest.
  std::size_t height() const;
  std::optional<std::size_t> find(const Subgame& s) const;

  // Children of `node` whose grid contains row `choice.row` (the row-side
  // children relative to the observed choice), and the rest.
  std::vector<std::size_t> row_children(std::size_t node, const StrategyProfile& choice) const;
  std::vector<std::size_t> col_children(std::size_t node, const StrategyProfile& choice) const;

  // Nodes ordered so every child precedes its parent.
  std::vector<std::size_t> bottom_up_order() const;

 private:
  friend LaminarForest laminar_forest(const DataSet& dataset);
  std::vector<Node> nodes_;
  std::vector<std::size_t> roots_;
};

// Throws NotLaminar.
LaminarForest laminar_forest(const DataSet& dataset);

// Removes the smaller of any two observations sharing a choice with nested
// grids, until no two observations share a choice. Throws NotLaminar,
// UniquenessViolated.
DataSet dedupe_nested(const DataSet& dataset);

}  // namespace ranklens
