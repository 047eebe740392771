#pragma once

#include <cstddef>

#include "ranklens/model.hpp"

namespace ranklens {

// Largest Hadamard order generated unless overridden.
inline constexpr std::size_t kDefaultHadamardCap = std::size_t{1} << 10;

// Sylvester construction of order 2^k. Throws SizeLimitExceeded when 2^k > cap.
SignMatrix sylvester_hadamard(unsigned k, std::size_t cap = kDefaultHadamardCap);

// One 2x2 block subgame per sign entry on n = 2m: +1 observes the diagonal
// pair, -1 the off-diagonal pair. Throws ZeroSignEntry.
DataSet two_regular_dataset(const SignMatrix& sign);

// Recovers the sign matrix of a 2-regular data set. Throws NotTwoRegular.
SignMatrix two_regular_signs(const DataSet& dataset);

// Replaces the second observation of every block by the half-row and
// half-column strips through it, which cross each other. Throws NotTwoRegular.
DataSet uniqueness_variant(const DataSet& two_regular);

// P_n: n/2 x n with +1 at column 2i-1 and -1 at column 2i of row i.
class BlockDifferenceOperator {
 public:
  explicit BlockDifferenceOperator(std::size_t n);  // throws SizeMismatch if n is odd

  std::size_t n() const { return n_; }
  RationalMatrix matrix() const;
  // P C P^T.
  RationalMatrix apply(const RationalMatrix& c) const;

 private:
  std::size_t n_;
};

// sign(P_n (A+B) P_n^T) == sign. Throws SizeMismatch unless n = 2 * order.
bool block_difference_certificate(const BimatrixGame& game, const SignMatrix& sign);

// ceil(sqrt(order)) for a power-of-two order. Throws NotPowerOfTwo.
std::size_t hadamard_minrank_bound(std::size_t order);

// True iff some real rank-one matrix u v^T has exactly this sign pattern.
// With no zero entries that holds iff s(i,j) s(0,0) == s(i,0) s(0,j) for all
// i, j; when false, every matrix with this pattern has rank >= 2.
bool rank_one_sign_realizable(const SignMatrix& sign);

}  // namespace ranklens
