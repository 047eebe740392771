#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ranklens/model.hpp"

using namespace ranklens;
using namespace ranklens::testing;

namespace {

// Determinant by permutation expansion; independent of the elimination code.
long det(const std::vector<std::vector<long>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  long total = 0;
  do {
    long sign = 1;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    long prod = sign;
    for (std::size_t r = 0; r < k; ++r) prod *= m[r][perm[r]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  for (std::size_t k = n; k > 0; --k)
    for (const auto& rs : subsets(n, k))
      for (const auto& cs : subsets(n, k)) {
        std::vector<std::vector<long>> sub(k, std::vector<long>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rs[a]][cs[b]];
        if (det(sub) != 0) return k;
      }
  return 0;
}

}  // namespace

TEST_CASE("validate_dataset canonicalizes and rejects malformed input") {
  const std::vector<RawObservation> fig{{{1, 1}, {1, 2}, {1, 2}}, {{2, 2}, {2, 1}, {1, 2}}};
  const auto d = validate_dataset(fig, 2);
  CHECK(d.size() == 2);
  CHECK(d == diagonal_pair());
  CHECK(d.observations()[1].subgame.rows() == std::vector<int>{1, 2});

  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalError;
  };
  CHECK(code([] { validate_dataset({{{1, 2}, {1}, {1}}}, 1); }) == ErrorCode::ChoiceOutsideSubgame);
  CHECK(code([] { validate_dataset({{{1, 2}, {1}, {1}}}, 2); }) == ErrorCode::ChoiceOutsideSubgame);
  CHECK(code([] { validate_dataset({{{1, 1}, {1, 3}, {1}}}, 2); }) == ErrorCode::IndexOutOfRange);
  CHECK(code([] { validate_dataset({{{1, 1}, {0, 1}, {1}}}, 2); }) == ErrorCode::IndexOutOfRange);
  CHECK(code([] { validate_dataset({{{1, 1}, {}, {1}}}, 2); }) == ErrorCode::EmptySubgame);
  CHECK(code([] { validate_dataset({}, 0); }) == ErrorCode::InvalidSize);

  const auto dup = validate_dataset({{{1, 1}, {1, 2}, {1, 2}}, {{1, 1}, {2, 1}, {2, 1, 1}}}, 2);
  CHECK(dup.size() == 1);
  // Same subgame, different choices: both kept.
  CHECK(validate_dataset(fig, 2).subgames().size() == 1);
}

TEST_CASE("strict equilibria of the rank-one example game") {
  const auto g = rank_one_example();
  const auto full = Subgame::full(2);
  CHECK(is_strict_equilibrium(g, full, {1, 1}));
  CHECK_FALSE(is_strict_equilibrium(g, full, {1, 2}));
  CHECK(strict_equilibria(g, full) == std::set<StrategyProfile>{{1, 1}, {2, 2}});
  CHECK(strict_equilibria(BimatrixGame::zeros(2), full).empty());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const auto single = Subgame::make({i}, {j}, 2);
      CHECK(is_strict_equilibrium(BimatrixGame::zeros(2), single, {i, j}));
      CHECK(strict_equilibria(g, single) == std::set<StrategyProfile>{{i, j}});
    }
  CHECK_THROWS_AS(is_strict_equilibrium(g, Subgame::make({1}, {1}, 2), {2, 2}), Error);
}

TEST_CASE("rationalizes reports failing observations") {
  CHECK(rationalizes(rank_one_example(), diagonal_pair()).rationalizes());

  const auto zero = rationalizes(BimatrixGame::zeros(2), diagonal_pair());
  CHECK_FALSE(zero.rationalizes());
  CHECK(zero.failures().size() == 2);

  const auto extended = diagonal_pair().with({obs(1, 2, {1, 2}, {1, 2}, 2)});
  const auto rep = rationalizes(rank_one_example(), extended);
  REQUIRE_FALSE(rep.rationalizes());
  const auto failures = rep.failures();
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].observation.choice == StrategyProfile{1, 2});
  const auto& v = failures[0].violations.front();
  CHECK(v.player == Violation::Player::Row);
  CHECK(v.chosen_payoff == 7);
  CHECK(v.deviation_payoff == 8);
  CHECK(to_string(v, failures[0].observation.choice) == "A[1,2]=7 <= A[2,2]=8");

  CHECK_THROWS_AS(rationalizes(BimatrixGame::zeros(3), diagonal_pair()), Error);
}

TEST_CASE("game_rank examples") {
  CHECK(game_rank(rank_one_example()) == 1);
  const auto a = mat({{3, -2, 5}, {1, 0, 7}, {4, 4, 4}});
  CHECK(game_rank(BimatrixGame(a, -a)) == 0);
  CHECK(game_rank(BimatrixGame(mat({{1, 1}, {1, -1}}), mat({{0, 0}, {0, 0}}))) == 2);
}

TEST_CASE("matrix_rank agrees with the minor-based rank") {
  std::mt19937 rng(7);
  auto check_matrix = [](const std::vector<std::vector<long>>& m) {
    RationalMatrix q(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) q(r, c) = m[r][c];
    REQUIRE(matrix_rank(q) == rank_by_minors(m));
  };
  // Every 2x2 matrix over {-2..2}.
  for (int code = 0; code < 625; ++code) {
    int x = code;
    std::vector<std::vector<long>> m(2, std::vector<long>(2));
    for (auto& row : m)
      for (auto& e : row) {
        e = x % 5 - 2;
        x /= 5;
      }
    check_matrix(m);
  }
  // Random 3x3 and 4x4, half of them built as low-rank products.
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t n = 3 + trial % 2;
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    if (trial % 4 < 2) {
      for (auto& row : m)
        for (auto& e : row) e = entry(rng);
    } else {
      const std::size_t k = 1 + trial % 3;
      std::vector<std::vector<long>> u(n, std::vector<long>(k)), v(k, std::vector<long>(n));
      for (auto& row : u)
        for (auto& e : row) e = entry(rng) / 2;
      for (auto& row : v)
        for (auto& e : row) e = entry(rng) / 2;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          long s = 0;
          for (std::size_t t = 0; t < k; ++t) s += u[r][t] * v[t][c];
          m[r][c] = std::clamp<long>(s, -2, 2);
        }
    }
    check_matrix(m);
  }
}

TEST_CASE("matrix_rank handles fractional entries") {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 2);
  m(1, 1) = 1;
  CHECK(matrix_rank(m) == 1);
  m(1, 1) = Rational(7, 5);
  CHECK(matrix_rank(m) == 2);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    RationalMatrix a(5, 5);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) a(r, c) = Rational(d(rng), 1 + std::abs(d(rng)));
    CHECK(game_rank(BimatrixGame(a, -a)) == 0);
  }
}

TEST_CASE("sign_pattern") {
  CHECK(sign_pattern(mat({{4, 8}, {8, 16}})) == SignMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(sign_pattern(mat({{3, -2}, {0, 5}})) == SignMatrix::from_rows({{1, -1}, {0, 1}}));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_int_matrix(rng, 4, -3, 3);
    const auto s = sign_pattern(x);
    CHECK(sign_pattern(s) == s);
    CHECK(sign_pattern(x.transposed()) == s.transposed());
  }
  CHECK_THROWS_AS(SignMatrix::from_rows({{2}}), Error);
}

TEST_CASE("strict equilibria are component-wise distinct") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const BimatrixGame g(random_int_matrix(rng, n, -3, 3), random_int_matrix(rng, n, -3, 3));
    const auto sub = random_subgame(rng, n, n);
    const auto eq = strict_equilibria(g, sub);
    CHECK(eq.size() <= std::min(sub.rows().size(), sub.cols().size()));
    std::set<int> rows, cols;
    for (const auto& p : eq) {
      rows.insert(p.row);
      cols.insert(p.col);
    }
    CHECK(rows.size() == eq.size());
    CHECK(cols.size() == eq.size());
  }
}

TEST_CASE("rationalizes iff every choice is a strict equilibrium of its subgame") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const BimatrixGame g(random_int_matrix(rng, n, -2, 2), random_int_matrix(rng, n, -2, 2));
    const auto d = random_dataset(rng, n, 1 + trial % 4, n);
    bool expected = true;
    for (const auto& o : d.observations())
      expected = expected && strict_equilibria(g, o.subgame).count(o.choice);
    CHECK(rationalizes(g, d).rationalizes() == expected);
  }
}
