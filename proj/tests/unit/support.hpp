#pragma once

#include <random>

#include "qsyl/qsyl.hpp"

namespace qsyl::test {

inline QuatMatrix random_int(Index m, Index n, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Quaternion> e(static_cast<std::size_t>(m * n));
  for (auto& q : e) q = {double(d(rng)), double(d(rng)), double(d(rng)), double(d(rng))};
  return QuatMatrix::from_entries(m, n, e);
}

inline QuatMatrix random_real(Index m, Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<Quaternion> e(static_cast<std::size_t>(m * n));
  for (auto& q : e) q = {d(rng), d(rng), d(rng), d(rng)};
  return QuatMatrix::from_entries(m, n, e);
}

// Product of an m x k and a k x n integer factor, so the rank is at most k.
inline QuatMatrix random_low_rank(Index m, Index n, Index k, std::mt19937_64& rng) {
  return random_int(m, k, rng, 2) * random_int(k, n, rng, 2);
}

inline double dist(const QuatMatrix& a, const QuatMatrix& b) { return (a - b).frobenius(); }

}  // namespace qsyl::test
