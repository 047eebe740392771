#include <doctest.h>

#include <bit>
#include <random>

#include "fixtures.hpp"
#include "ranklens/oracle.hpp"
#include "ranklens/rationalize.hpp"
#include "ranklens/structure.hpp"

using namespace ranklens;
using namespace ranklens::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

SearchConfig with_m(int m) {
  SearchConfig c;
  c.max_abs_payoff = m;
  c.budget = 1'000'000'000;
  return c;
}

std::vector<DataSet> all_2x2(std::size_t max_obs) {
  std::vector<Observation> atoms;
  const std::vector<std::vector<int>> sides{{1}, {2}, {1, 2}};
  for (const auto& rows : sides)
    for (const auto& cols : sides)
      for (int i : rows)
        for (int j : cols) atoms.push_back(obs(i, j, rows, cols, 2));
  std::vector<DataSet> out;
  for (std::uint32_t mask = 1; mask < (1u << atoms.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_obs) continue;
    std::vector<Observation> pick;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (mask >> k & 1) pick.push_back(atoms[k]);
    out.push_back(make_dataset(2, pick));
  }
  return out;
}

}  // namespace

TEST_CASE("brute_force_min_rank examples") {
  CHECK(brute_force_min_rank(diagonal_pair(), with_m(3)) == std::optional<std::size_t>{1});
  CHECK_FALSE(brute_force_min_rank(refuted_pair(), with_m(3)).has_value());
  CHECK(brute_force_min_rank(make_dataset(2, {obs(1, 1, {1, 2}, {1, 2}, 2)}), with_m(3)) ==
        std::optional<std::size_t>{0});
  const auto witness = BimatrixGame(mat({{1, 2}, {0, 3}}), -mat({{1, 2}, {0, 3}}));
  CHECK(rationalizes(witness, make_dataset(2, {obs(1, 1, {1, 2}, {1, 2}, 2)})).rationalizes());

  const auto h = make_dataset(2, {obs(1, 1, {1, 2}, {1, 2}, 2), obs(2, 2, {1, 2}, {1, 2}, 2),
                                  obs(1, 2, {1}, {1, 2}, 2)});
  CHECK(brute_force_min_rank(h, with_m(3)) == brute_force_min_rank(h, with_m(4)));
}

TEST_CASE("brute_force_min_rank limits") {
  CHECK(code_of([] { brute_force_min_rank(diagonal_pair(), with_m(0)); }) == ErrorCode::InvalidSize);
  const auto n3 = make_dataset(3, {obs(1, 1, {1}, {1}, 3)});
  CHECK(code_of([&] { brute_force_min_rank(n3); }) == ErrorCode::SizeLimitExceeded);
  SearchConfig tight;
  tight.budget = 1000;
  CHECK(code_of([&] { brute_force_min_rank(diagonal_pair(), tight); }) == ErrorCode::BudgetExceeded);
  SearchConfig one;
  one.max_n = 1;
  CHECK(brute_force_min_rank(make_dataset(1, {obs(1, 1, {1}, {1}, 1)}), one) ==
        std::optional<std::size_t>{0});
}

TEST_CASE("brute_force_min_rank is independent of the thread count") {
  for (const auto& d : all_2x2(2)) {
    SearchConfig a = with_m(2), b = with_m(2);
    a.threads = 1;
    b.threads = 5;
    REQUIRE(brute_force_min_rank(d, a) == brute_force_min_rank(d, b));
  }
}

TEST_CASE("zero_sum_feasible") {
  CHECK_FALSE(zero_sum_feasible(diagonal_pair()));
  CHECK(zero_sum_feasible(make_dataset(3, {obs(2, 3, {1, 2, 3}, {2, 3}, 3)})));
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) CHECK(zero_sum_feasible(random_laminar_unique(rng)));
}

TEST_CASE("all_subgame_equilibria") {
  const auto eq = all_subgame_equilibria(rank_one_example(), diagonal_pair());
  REQUIRE(eq.size() == 1);
  CHECK(eq.at(Subgame::full(2)) == std::set<StrategyProfile>{{1, 1}, {2, 2}});

  std::mt19937 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_laminar_unique(rng);
    for (const auto& [sub, set] : all_subgame_equilibria(rationalize_zero_sum(d).game, d))
      CHECK(set.size() == 1);
    for (const auto& [sub, set] : all_subgame_equilibria(BimatrixGame::zeros(d.n()), d))
      if (sub.area() > 1) CHECK(set.empty());
  }
  CHECK_THROWS_AS(all_subgame_equilibria(BimatrixGame::zeros(3), diagonal_pair()), Error);
}

TEST_CASE("oracle agrees with the constructions on 2x2 data with up to two observations") {
  for (const auto& d : all_2x2(2)) {
    const auto r = brute_force_min_rank(d, with_m(3));
    CHECK(r.has_value() == is_rationalizable(d).rationalizable);
    CHECK((r == std::optional<std::size_t>{0}) == zero_sum_feasible(d));
    CHECK(r == brute_force_min_rank(d, with_m(4)));
    if (r && satisfies_uniqueness(d)) CHECK(*r <= crossing_span(d).span);
  }
}
