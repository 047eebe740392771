#include "ranklens/model.hpp"

#include <algorithm>
#include <sstream>

namespace ranklens {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySubgame: return "EmptySubgame";
    case ErrorCode::ChoiceOutsideSubgame: return "ChoiceOutsideSubgame";
    case ErrorCode::ProfileOutsideSubgame: return "ProfileOutsideSubgame";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotLaminar: return "NotLaminar";
    case ErrorCode::UniquenessViolated: return "UniquenessViolated";
    case ErrorCode::NotDeduped: return "NotDeduped";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::SubgameNotFull: return "SubgameNotFull";
    case ErrorCode::NotRationalizable: return "NotRationalizable";
    case ErrorCode::NotTwoRegular: return "NotTwoRegular";
    case ErrorCode::ZeroSignEntry: return "ZeroSignEntry";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

std::string to_string(const StrategyProfile& p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

namespace {

std::vector<int> canonical_indices(std::vector<int> idx, int n) {
  if (idx.empty()) throw Error(ErrorCode::EmptySubgame, "subgame has an empty index set");
  for (int v : idx) {
    if (v < 1 || v > n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

std::string join(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + "}";
}

bool is_subset(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool overlaps(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

}  // namespace

Subgame Subgame::make(std::vector<int> rows, std::vector<int> cols, int n) {
  Subgame s;
  s.rows_ = canonical_indices(std::move(rows), n);
  s.cols_ = canonical_indices(std::move(cols), n);
  return s;
}

Subgame Subgame::full(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k + 1;
  return make(all, all, n);
}

bool Subgame::has_row(int r) const { return std::binary_search(rows_.begin(), rows_.end(), r); }
bool Subgame::has_col(int c) const { return std::binary_search(cols_.begin(), cols_.end(), c); }

bool Subgame::contains(const Subgame& other) const {
  return is_subset(other.rows_, rows_) && is_subset(other.cols_, cols_);
}

bool Subgame::intersects(const Subgame& other) const {
  return overlaps(rows_, other.rows_) && overlaps(cols_, other.cols_);
}

bool Subgame::is_full(int n) const {
  return static_cast<int>(rows_.size()) == n && static_cast<int>(cols_.size()) == n;
}

std::string to_string(const Subgame& s) { return join(s.rows()) + "x" + join(s.cols()); }

std::vector<Subgame> DataSet::subgames() const {
  std::vector<Subgame> out;
  out.reserve(observations_.size());
  for (const auto& o : observations_) out.push_back(o.subgame);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DataSet DataSet::with(const std::vector<Observation>& extra) const {
  auto all = observations_;
  all.insert(all.end(), extra.begin(), extra.end());
  return make_dataset(n_, std::move(all));
}

DataSet DataSet::without(std::size_t index) const {
  auto all = observations_;
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(index));
  return make_dataset(n_, std::move(all));
}

DataSet make_dataset(int n, std::vector<Observation> observations) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
  for (auto& o : observations) {
    o.subgame = Subgame::make(o.subgame.rows(), o.subgame.cols(), n);
    // Subgame indices are in range, so this also rejects out-of-range choices.
    if (!o.subgame.contains(o.choice))
      throw Error(ErrorCode::ChoiceOutsideSubgame,
                  "choice " + to_string(o.choice) + " not in subgame " + to_string(o.subgame));
  }
  std::sort(observations.begin(), observations.end());
  observations.erase(std::unique(observations.begin(), observations.end()), observations.end());
  DataSet d;
  d.n_ = n;
  d.observations_ = std::move(observations);
  return d;
}

DataSet validate_dataset(const std::vector<RawObservation>& raw, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
  std::vector<Observation> obs;
  obs.reserve(raw.size());
  for (const auto& r : raw) obs.push_back({r.choice, Subgame::make(r.rows, r.cols, n)});
  return make_dataset(n, std::move(obs));
}

BimatrixGame::BimatrixGame(RationalMatrix row_payoffs, RationalMatrix col_payoffs)
    : a_(std::move(row_payoffs)), b_(std::move(col_payoffs)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows())
    throw Error(ErrorCode::SizeMismatch, "payoff matrices must be square and of equal size");
  if (a_.rows() == 0) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
}

BimatrixGame BimatrixGame::zeros(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "game size must be at least 1");
  return BimatrixGame(RationalMatrix(n, n, 0), RationalMatrix(n, n, 0));
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  SignMatrix s(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != s.cols()) throw Error(ErrorCode::SizeMismatch, "ragged sign matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) s.set(r, c, rows[r][c]);
  }
  return s;
}

void SignMatrix::set(std::size_t r, std::size_t c, int sign) {
  if (sign < -1 || sign > 1)
    throw Error(ErrorCode::IndexOutOfRange, "sign entries must be -1, 0 or +1");
  m_(r, c) = sign;
}

bool SignMatrix::has_zero() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (m_(r, c) == 0) return true;
  return false;
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix t;
  t.m_ = m_.transposed();
  return t;
}

RationalMatrix SignMatrix::to_rational() const {
  RationalMatrix out(rows(), cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out(r, c) = m_(r, c);
  return out;
}

bool is_strict_equilibrium(const BimatrixGame& game, const Subgame& subgame,
                           const StrategyProfile& profile) {
  if (!subgame.contains(profile))
    throw Error(ErrorCode::ProfileOutsideSubgame,
                to_string(profile) + " not in subgame " + to_string(subgame));
  const int i = profile.row;
  const int j = profile.col;
  if (i > game.n() || j > game.n() || subgame.rows().back() > game.n() ||
      subgame.cols().back() > game.n())
    throw Error(ErrorCode::SizeMismatch, "subgame exceeds game size");
  for (int r : subgame.rows())
    if (r != i && !(game.a(i, j) > game.a(r, j))) return false;
  for (int c : subgame.cols())
    if (c != j && !(game.b(i, j) > game.b(i, c))) return false;
  return true;
}

std::set<StrategyProfile> strict_equilibria(const BimatrixGame& game, const Subgame& subgame) {
  std::set<StrategyProfile> out;
  for (int r : subgame.rows())
    for (int c : subgame.cols())
      if (is_strict_equilibrium(game, subgame, {r, c})) out.insert({r, c});
  return out;
}

std::string to_string(const Violation& v, const StrategyProfile& choice) {
  std::ostringstream os;
  const char* m = v.player == Violation::Player::Row ? "A" : "B";
  os << m << "[" << choice.row << "," << choice.col << "]=" << v.chosen_payoff << " <= " << m
     << "[" << v.deviation.row << "," << v.deviation.col << "]=" << v.deviation_payoff;
  return os.str();
}

bool VerificationReport::rationalizes() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed(); });
}

std::vector<ObservationOutcome> VerificationReport::failures() const {
  std::vector<ObservationOutcome> out;
  for (const auto& o : outcomes)
    if (!o.passed()) out.push_back(o);
  return out;
}

VerificationReport rationalizes(const BimatrixGame& game, const DataSet& dataset) {
  if (game.n() != dataset.n())
    throw Error(ErrorCode::SizeMismatch, "game has size " + std::to_string(game.n()) +
                                             " but data set has size " +
                                             std::to_string(dataset.n()));
  VerificationReport report;
  for (const auto& obs : dataset.observations()) {
    ObservationOutcome outcome{obs, {}};
    const int i = obs.choice.row;
    const int j = obs.choice.col;
    for (int r : obs.subgame.rows())
      if (r != i && !(game.a(i, j) > game.a(r, j)))
        outcome.violations.push_back({Violation::Player::Row, {r, j}, game.a(i, j), game.a(r, j)});
    for (int c : obs.subgame.cols())
      if (c != j && !(game.b(i, j) > game.b(i, c)))
        outcome.violations.push_back(
            {Violation::Player::Column, {i, c}, game.b(i, j), game.b(i, c)});
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

std::size_t matrix_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; row scaling preserves rank.
  Matrix<mpz_class> z(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                                   m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c)
      z(r, c) = m(r, c).get_num() * (scale / m(r, c).get_den());
  }

  // Bareiss fraction-free elimination; pivot is the first nonzero in the column.
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < cols && rank < rows; ++k) {
    std::size_t pivot = rank;
    while (pivot < rows && z(pivot, k) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c) std::swap(z(pivot, c), z(rank, c));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        z(r, c) = z(rank, k) * z(r, c) - z(r, k) * z(rank, c);
        mpz_divexact(z(r, c).get_mpz_t(), z(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      z(r, k) = 0;
    }
    prev = z(rank, k);
    ++rank;
  }
  return rank;
}

std::size_t game_rank(const BimatrixGame& game) { return matrix_rank(game.payoff_sum()); }

SignMatrix sign_pattern(const RationalMatrix& m) {
  SignMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.set(r, c, sgn(m(r, c)));
  return s;
}

SignMatrix sign_pattern(const SignMatrix& m) { return sign_pattern(m.to_rational()); }

}  // namespace ranklens
