#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qsyl/io.hpp"

namespace qsyl {

ResidualReport residual(const CoupledSystem& sys, const std::vector<QuatMatrix>& X);
ResidualReport residual(const PairSystem& sys, const QuatMatrix& X1, const QuatMatrix& X2, const QuatMatrix& X3);
ResidualReport residual(const FourTermEquation& eq, const FourTermSolution& x);

// One term L X R of a linear matrix equation; a null coefficient stands for the identity.
struct LinearTerm {
  const QuatMatrix* left = nullptr;
  int unknown = 0;
  const QuatMatrix* right = nullptr;
  double sign = 1.0;
};

struct LinearEquation {
  std::vector<LinearTerm> terms;
  const QuatMatrix* rhs = nullptr;
};

struct OracleOptions {
  // Cap on the number of real unknowns.
  Index cap = 20000;
  double cond_tol = 1e-9;
};

struct OracleVerdict {
  bool consistent = false;
  // ||M x - c|| / (1 + ||c||) for the least-squares x of the real vectorized system.
  double relative_residual = 0.0;
  Index unknowns = 0;
};

// Left and right multiplication by q as 4x4 real matrices acting on (a0, a1, a2, a3).
Eigen::Matrix4d left_mult(const Quaternion& q);
Eigen::Matrix4d right_mult(const Quaternion& q);

// Decides solvability of a general system of linear matrix equations through the real
// 4x4 representation; shares no code with the adjoint-based rank and pinv.
OracleVerdict oracle_check(const std::vector<LinearEquation>& eqs, const std::vector<Shape>& unknowns,
                           const OracleOptions& opt = {});
OracleVerdict oracle_check(const CoupledSystem& sys, const OracleOptions& opt = {});
OracleVerdict oracle_check(const PairSystem& sys, const OracleOptions& opt = {});
OracleVerdict oracle_check(const FourTermEquation& eq, const OracleOptions& opt = {});

// Worked reference systems stored under fixtures/ as <id>.qsys.
struct ReferenceFixture {
  std::string id;
  SystemFile file;
  CoupledSystem recorded;
  CoupledSystem corrected;
  std::vector<QuatMatrix> recorded_solution;
  std::vector<QuatMatrix> corrected_solution;
  std::vector<long> reference_ranks;
  std::string checksum;
};

const std::vector<std::string>& reference_ids();
ReferenceFixture reference_fixture(const std::string& id, const std::filesystem::path& dir);

}  // namespace qsyl
