#include <algorithm>
#include <random>

#include "qsyl/coupled.hpp"
#include "qsyl/errors.hpp"

namespace qsyl {

namespace {

QuatMatrix random_matrix(Index m, Index n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  QuatMatrix out(m, n);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < n; ++c) {
      const double a0 = d(rng), a1 = d(rng), a2 = d(rng), a3 = d(rng);
      out.set(r, c, {a0, a1, a2, a3});
    }
  return out;
}

// Product of random m x k and k x n factors; generically of rank k.
QuatMatrix random_coefficient(Index m, Index n, const GenOptions& opt, std::mt19937_64& rng) {
  const Index full = std::min(m, n);
  const Index lo = opt.rank_deficient ? 0 : std::min<Index>(1, full);
  const Index hi = opt.rank_deficient ? std::max<Index>(full - 1, 0) : full;
  const Index k = std::uniform_int_distribution<Index>(lo, hi)(rng);
  return random_matrix(m, k, opt.entry_bound, rng) * random_matrix(k, n, opt.entry_bound, rng);
}

}  // namespace

Generated generate(Kind kind, const GenOptions& opt, unsigned long long seed) {
  if (opt.max_dim < 1) throw ShapeError("max_dim must be at least 1");
  if (opt.entry_bound < 1) throw ShapeError("entry_bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> side(1, opt.max_dim);
  Generated g;
  g.sys.kind = kind;
  for (int k = 0; k < unknown_count(kind); ++k) {
    const Index m = opt.vary_dims ? side(rng) : opt.max_dim;
    const Index n = opt.vary_dims ? side(rng) : opt.max_dim;
    g.planted.push_back(random_matrix(m, n, opt.entry_bound, rng));
  }
  for (const auto& [l, r] : pattern(kind)) {
    const QuatMatrix& xl = g.planted[static_cast<size_t>(l)];
    const QuatMatrix& xr = g.planted[static_cast<size_t>(r)];
    QuatMatrix A = random_coefficient(xr.rows(), xl.rows(), opt, rng);
    QuatMatrix B = random_coefficient(xr.cols(), xl.cols(), opt, rng);
    g.sys.C.push_back(A * xl - xr * B);
    g.sys.A.push_back(std::move(A));
    g.sys.B.push_back(std::move(B));
  }
  return g;
}

Perturbation perturb(const CoupledSystem& sys, unsigned long long seed, const Tolerances& tol) {
  sys.unknown_shapes();
  std::mt19937_64 rng(seed);
  const Ops o(tol, tol.zero_rtol * sys.scale());
  const double floor = 1e-6;

  std::vector<int> order(sys.A.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);

  Quaternion delta;
  std::uniform_int_distribution<int> d(-2, 2);
  while (delta.norm2() == 0.0) delta = {double(d(rng)), double(d(rng)), double(d(rng)), double(d(rng))};

  Perturbation p;
  p.sys = sys;
  p.delta = delta;
  for (int i : order) {
    const auto& C = sys.C[static_cast<size_t>(i)];
    if (C.empty()) continue;
    const QuatMatrix RA = o.R(sys.A[static_cast<size_t>(i)]), LB = o.L(sys.B[static_cast<size_t>(i)]);
    std::vector<Index> rows, cols;
    for (Index r = 0; r < RA.cols(); ++r)
      if (RA.block(0, r, RA.rows(), 1).frobenius() > floor) rows.push_back(r);
    for (Index c = 0; c < LB.rows(); ++c)
      if (LB.block(c, 0, 1, LB.cols()).frobenius() > floor) cols.push_back(c);
    if (rows.empty() || cols.empty()) continue;
    p.equation = i;
    p.row = rows[std::uniform_int_distribution<size_t>(0, rows.size() - 1)(rng)];
    p.col = cols[std::uniform_int_distribution<size_t>(0, cols.size() - 1)(rng)];
    p.guaranteed = true;
    break;
  }
  if (!p.guaranteed) {
    // Every equation is solvable for any right-hand side; perturb a random nonempty entry anyway.
    std::vector<int> nonempty;
    for (int i : order)
      if (!sys.C[static_cast<size_t>(i)].empty()) nonempty.push_back(i);
    if (nonempty.empty()) throw ShapeError("no right-hand side entry to perturb");
    p.equation = nonempty.front();
    const auto& C = sys.C[static_cast<size_t>(p.equation)];
    p.row = std::uniform_int_distribution<Index>(0, C.rows() - 1)(rng);
    p.col = std::uniform_int_distribution<Index>(0, C.cols() - 1)(rng);
  }
  auto& C = p.sys.C[static_cast<size_t>(p.equation)];
  C.set(p.row, p.col, C(p.row, p.col) + delta);
  return p;
}

}  // namespace qsyl
