#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ranklens/error.hpp"
#include "ranklens/matrix.hpp"

namespace ranklens {

using Rational = mpq_class;
using RationalMatrix = Matrix<Rational>;

// A pure strategy profile (row, col), 1-based.
struct StrategyProfile {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

std::string to_string(const StrategyProfile& p);

// The grid rows x cols of strategies available in one observation. Index
// sets are kept sorted and duplicate-free, so equality is set equality.
class Subgame {
 public:
  Subgame() = default;

  // Validates against ambient size n and canonicalizes. Throws EmptySubgame,
  // IndexOutOfRange.
  static Subgame make(std::vector<int> rows, std::vector<int> cols, int n);
  static Subgame full(int n);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }

  bool has_row(int r) const;
  bool has_col(int c) const;
  bool contains(const StrategyProfile& p) const { return has_row(p.row) && has_col(p.col); }
  // Grid containment (not necessarily strict).
  bool contains(const Subgame& other) const;
  bool intersects(const Subgame& other) const;
  bool is_full(int n) const;
  std::size_t area() const { return rows_.size() * cols_.size(); }

  friend auto operator<=>(const Subgame&, const Subgame&) = default;

 private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

std::string to_string(const Subgame& s);

struct Observation {
  StrategyProfile choice;
  Subgame subgame;

  friend auto operator<=>(const Observation&, const Observation&) = default;
};

// Unvalidated observation as read from input.
struct RawObservation {
  StrategyProfile choice;
  std::vector<int> rows;
  std::vector<int> cols;
};

// Canonical data set: observations sorted and deduplicated. Only
// validate_dataset (and the factories built on it) produce instances.
class DataSet {
 public:
  int n() const { return n_; }
  const std::vector<Observation>& observations() const { return observations_; }
  std::size_t size() const { return observations_.size(); }
  bool empty() const { return observations_.empty(); }

  // Distinct subgames, sorted.
  std::vector<Subgame> subgames() const;

  // New data set with extra observations merged in (validated).
  DataSet with(const std::vector<Observation>& extra) const;
  DataSet without(std::size_t index) const;

  friend bool operator==(const DataSet&, const DataSet&) = default;

 private:
  friend DataSet validate_dataset(const std::vector<RawObservation>&, int);
  friend DataSet make_dataset(int, std::vector<Observation>);
  int n_ = 0;
  std::vector<Observation> observations_;
};

DataSet validate_dataset(const std::vector<RawObservation>& raw, int n);
// Same checks as validate_dataset for already-typed observations.
DataSet make_dataset(int n, std::vector<Observation> observations);

class BimatrixGame {
 public:
  BimatrixGame(RationalMatrix row_payoffs, RationalMatrix col_payoffs);
  static BimatrixGame zeros(int n);

  int n() const { return static_cast<int>(a_.rows()); }
  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }
  // 1-based accessors.
  const Rational& a(int i, int j) const { return a_(i - 1, j - 1); }
  const Rational& b(int i, int j) const { return b_(i - 1, j - 1); }

  RationalMatrix payoff_sum() const { return a_ + b_; }

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols) : m_(rows, cols, 0) {}
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  int operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  void set(std::size_t r, std::size_t c, int sign);

  bool has_zero() const;
  SignMatrix transposed() const;
  RationalMatrix to_rational() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  Matrix<int> m_;
};

// Strict pure Nash check within the subgame. Throws ProfileOutsideSubgame.
bool is_strict_equilibrium(const BimatrixGame& game, const Subgame& subgame,
                           const StrategyProfile& profile);

std::set<StrategyProfile> strict_equilibria(const BimatrixGame& game, const Subgame& subgame);

struct Violation {
  enum class Player { Row, Column };
  Player player;
  StrategyProfile deviation;  // profile the deviating player moves to
  Rational chosen_payoff;
  Rational deviation_payoff;
};

std::string to_string(const Violation& v, const StrategyProfile& choice);

struct ObservationOutcome {
  Observation observation;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

struct VerificationReport {
  std::vector<ObservationOutcome> outcomes;

  bool rationalizes() const;
  std::vector<ObservationOutcome> failures() const;
};

// Throws SizeMismatch when game and data set disagree on n.
VerificationReport rationalizes(const BimatrixGame& game, const DataSet& dataset);

// Exact rank over the rationals (Bareiss on integer-scaled rows).
std::size_t matrix_rank(const RationalMatrix& m);
std::size_t game_rank(const BimatrixGame& game);

SignMatrix sign_pattern(const RationalMatrix& m);
SignMatrix sign_pattern(const SignMatrix& m);

}  // namespace ranklens
