#pragma once

#include "qsyl/certificate.hpp"
#include "qsyl/linalg.hpp"

namespace qsyl {

// A X - Y B = C. Free parameters: U, W, V.
struct SingleSolution {
  QuatMatrix X;
  QuatMatrix Y;
};
ShapeMap single_shapes(const QuatMatrix& A, const QuatMatrix& B, const QuatMatrix& C);
SingleSolution solve_single(const QuatMatrix& A, const QuatMatrix& B, const QuatMatrix& C,
                            const FreeParameters& free = {}, const Tolerances& tol = {});

enum class PairKind {
  common_right,  // A1 X1 - X2 B1 = C1,  A2 X3 - X2 B2 = C2
  chain,         // A1 X1 - X2 B1 = C1,  A2 X2 - X3 B2 = C2
  common_left,   // A1 X1 - X2 B1 = C1,  A2 X1 - X3 B2 = C2
};
const char* to_string(PairKind k);

struct PairSystem {
  PairKind kind = PairKind::common_right;
  QuatMatrix A1, B1, C1, A2, B2, C2;

  // Shapes of X1, X2, X3; throws ShapeError when the coefficients are not conformable.
  std::vector<Shape> unknown_shapes() const;
  double scale() const;
};

struct PairSolution {
  QuatMatrix X1, X2, X3;
  FreeParameters free;
};

RankCertificate check_pair(const PairSystem& sys, const Tolerances& tol = {});
ShapeMap pair_shapes(const PairSystem& sys);
PairSolution solve_pair(const PairSystem& sys, const FreeParameters& free = {}, const Tolerances& tol = {});
std::vector<double> pair_residuals(const PairSystem& sys, const QuatMatrix& X1, const QuatMatrix& X2,
                                   const QuatMatrix& X3);

// A1 X1 + X2 B1 + C3 X3 D3 + C4 X4 D4 = E1
struct FourTermEquation {
  QuatMatrix A1, B1, C3, D3, C4, D4, E1;

  std::vector<Shape> unknown_shapes() const;
  double scale() const;
};

struct FourTermAux {
  QuatMatrix A, B, C, D, E, M, N, S;
};

struct FourTermSolution {
  QuatMatrix X1, X2, X3, X4;
};

FourTermAux four_term_aux(const FourTermEquation& eq, const Ops& ops);
// The four vanishing conditions, residual-tested against cond_tol * scale.
std::vector<ProjectorCondition> four_term_conditions(const FourTermAux& aux, const Ops& ops, double scale,
                                                     const std::string& prefix = "");
// Parameters T1..T8.
ShapeMap four_term_shapes(const FourTermEquation& eq);
FourTermSolution four_term_assemble(const FourTermEquation& eq, const FourTermAux& aux,
                                    const FreeParameters& T, const Ops& ops);
// Checks consistency and throws Inconsistent before assembling.
FourTermSolution solve_four_term(const FourTermEquation& eq, const FreeParameters& T = {},
                                 const Tolerances& tol = {});
double four_term_residual(const FourTermEquation& eq, const FourTermSolution& x);

// r(A) + r(R_A B) = r([A B]) and r(A) + r(C L_A) = r([A; C]).
struct RankIdentity {
  bool row_identity = false;
  bool col_identity = false;
};
RankIdentity rank_identity_check(const QuatMatrix& A, const QuatMatrix& B, const QuatMatrix& C,
                                 const Tolerances& tol = {});

// Block-matrix rank test [[G, A], [B, 0]] against r(A) + r(B).
RankCondition two_by_two_condition(std::string id, const QuatMatrix& G, const QuatMatrix& A,
                                   const QuatMatrix& B, const Ops& ops);
ProjectorCondition projector_condition(std::string id, const QuatMatrix& value, const Ops& ops, double scale);

}  // namespace qsyl
