#include "ranklens/adversarial.hpp"

#include <map>

#include "ranklens/structure.hpp"

namespace ranklens {

SignMatrix sylvester_hadamard(unsigned k, std::size_t cap) {
  if (k >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << k) > cap)
    throw Error(ErrorCode::SizeLimitExceeded,
                "Hadamard order 2^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  SignMatrix h = SignMatrix::from_rows({{1}});
  for (unsigned step = 0; step < k; ++step) {
    const std::size_t m = h.rows();
    SignMatrix next(2 * m, 2 * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        next.set(r, c, h(r, c));
        next.set(r, c + m, h(r, c));
        next.set(r + m, c, h(r, c));
        next.set(r + m, c + m, -h(r, c));
      }
    h = std::move(next);
  }
  return h;
}

namespace {

Subgame block(int i, int j, int n) { return Subgame::make({2 * i - 1, 2 * i}, {2 * j - 1, 2 * j}, n); }

}  // namespace

DataSet two_regular_dataset(const SignMatrix& sign) {
  if (sign.rows() != sign.cols() || sign.rows() == 0)
    throw Error(ErrorCode::SizeMismatch, "sign matrix must be square and nonempty");
  if (sign.has_zero()) throw Error(ErrorCode::ZeroSignEntry, "sign matrix has a zero entry");
  const int m = static_cast<int>(sign.rows());
  const int n = 2 * m;
  std::vector<Observation> obs;
  obs.reserve(2 * static_cast<std::size_t>(m) * m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const auto sub = block(i, j, n);
      if (sign(i - 1, j - 1) > 0) {
        obs.push_back({{2 * i - 1, 2 * j - 1}, sub});
        obs.push_back({{2 * i, 2 * j}, sub});
      } else {
        obs.push_back({{2 * i - 1, 2 * j}, sub});
        obs.push_back({{2 * i, 2 * j - 1}, sub});
      }
    }
  return make_dataset(n, std::move(obs));
}

SignMatrix two_regular_signs(const DataSet& dataset) {
  const int n = dataset.n();
  if (n % 2 != 0) throw Error(ErrorCode::NotTwoRegular, "game size is odd");
  const int m = n / 2;
  std::map<Subgame, std::set<StrategyProfile>> choices;
  for (const auto& o : dataset.observations()) choices[o.subgame].insert(o.choice);
  if (choices.size() != static_cast<std::size_t>(m) * m)
    throw Error(ErrorCode::NotTwoRegular, "expected one subgame per 2x2 block");
  SignMatrix sign(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      auto it = choices.find(block(i, j, n));
      if (it == choices.end())
        throw Error(ErrorCode::NotTwoRegular, "missing block subgame " + to_string(block(i, j, n)));
      const std::set<StrategyProfile> diag{{2 * i - 1, 2 * j - 1}, {2 * i, 2 * j}};
      const std::set<StrategyProfile> off{{2 * i - 1, 2 * j}, {2 * i, 2 * j - 1}};
      if (it->second == diag) sign.set(i - 1, j - 1, 1);
      else if (it->second == off) sign.set(i - 1, j - 1, -1);
      else throw Error(ErrorCode::NotTwoRegular, "block " + to_string(it->first) +
                                                     " is neither a diagonal nor an off-diagonal pair");
    }
  return sign;
}

DataSet uniqueness_variant(const DataSet& two_regular) {
  const auto sign = two_regular_signs(two_regular);
  const int m = static_cast<int>(sign.rows());
  const int n = 2 * m;
  std::vector<Observation> obs;
  obs.reserve(3 * static_cast<std::size_t>(m) * m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const int r1 = 2 * i - 1, r2 = 2 * i, c1 = 2 * j - 1, c2 = 2 * j;
      if (sign(i - 1, j - 1) > 0) {
        obs.push_back({{r1, c1}, block(i, j, n)});
        obs.push_back({{r2, c2}, Subgame::make({r1, r2}, {c2}, n)});
        obs.push_back({{r2, c2}, Subgame::make({r2}, {c1, c2}, n)});
      } else {
        obs.push_back({{r1, c2}, block(i, j, n)});
        obs.push_back({{r2, c1}, Subgame::make({r1, r2}, {c1}, n)});
        obs.push_back({{r2, c1}, Subgame::make({r2}, {c1, c2}, n)});
      }
    }
  return make_dataset(n, std::move(obs));
}

BlockDifferenceOperator::BlockDifferenceOperator(std::size_t n) : n_(n) {
  if (n == 0 || n % 2 != 0)
    throw Error(ErrorCode::SizeMismatch, "block difference operator needs a positive even size");
}

RationalMatrix BlockDifferenceOperator::matrix() const {
  RationalMatrix p(n_ / 2, n_, 0);
  for (std::size_t i = 0; i < n_ / 2; ++i) {
    p(i, 2 * i) = 1;
    p(i, 2 * i + 1) = -1;
  }
  return p;
}

RationalMatrix BlockDifferenceOperator::apply(const RationalMatrix& c) const {
  if (c.rows() != n_ || c.cols() != n_)
    throw Error(ErrorCode::SizeMismatch, "operand size does not match operator");
  const auto p = matrix();
  return p * c * p.transposed();
}

bool block_difference_certificate(const BimatrixGame& game, const SignMatrix& sign) {
  if (sign.rows() != sign.cols() || static_cast<std::size_t>(game.n()) != 2 * sign.rows())
    throw Error(ErrorCode::SizeMismatch, "game size must be twice the sign matrix order");
  const BlockDifferenceOperator p(static_cast<std::size_t>(game.n()));
  return sign_pattern(p.apply(game.payoff_sum())) == sign;
}

std::size_t hadamard_minrank_bound(std::size_t order) {
  if (order == 0 || (order & (order - 1)) != 0)
    throw Error(ErrorCode::NotPowerOfTwo, std::to_string(order) + " is not a power of two");
  std::size_t r = 0;
  while (r * r < order) ++r;
  return r;
}

bool rank_one_sign_realizable(const SignMatrix& sign) {
  std::size_t i0 = sign.rows();
  std::size_t j0 = sign.cols();
  for (std::size_t r = 0; r < sign.rows() && i0 == sign.rows(); ++r)
    for (std::size_t c = 0; c < sign.cols(); ++c)
      if (sign(r, c) != 0) {
        i0 = r;
        j0 = c;
        break;
      }
  if (i0 == sign.rows()) return true;  // zero pattern
  // Candidate factors: column signs from row i0, row signs from column j0.
  for (std::size_t r = 0; r < sign.rows(); ++r)
    for (std::size_t c = 0; c < sign.cols(); ++c) {
      const int u = sign(r, j0) * sign(i0, j0);
      const int v = sign(i0, c);
      if (sign(r, c) != u * v) return false;
    }
  return true;
}

}  // namespace ranklens
