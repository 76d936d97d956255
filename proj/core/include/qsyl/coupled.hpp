#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsyl/blocks.hpp"
#include "qsyl/equations.hpp"

namespace qsyl {

enum class Kind { sys01, sys02, sys03, sys04, sys05, special01, special02, special03 };

inline constexpr Kind all_kinds[] = {Kind::sys01,     Kind::sys02,     Kind::sys03,    Kind::sys04,
                                     Kind::sys05,     Kind::special01, Kind::special02, Kind::special03};

const char* to_string(Kind k);
std::optional<Kind> parse_kind(std::string_view name);
bool is_special(Kind k);

// Equation i reads A_i X_left - X_right B_i = C_i (0-based unknown indices).
struct EquationPattern {
  int left;
  int right;
};
const std::vector<EquationPattern>& pattern(Kind k);
int equation_count(Kind k);
int unknown_count(Kind k);

struct CoupledSystem {
  Kind kind = Kind::sys01;
  std::vector<QuatMatrix> A, B, C;  // one entry per equation

  std::vector<OneSided> equations() const;
  // Throws ShapeError when the coefficients are not conformable for the kind.
  std::vector<Shape> unknown_shapes() const;
  double scale() const;

  // Zero coefficients and right-hand sides for the given unknown shapes.
  static CoupledSystem zeros(Kind kind, const std::vector<Shape>& unknowns);
};

// Per-kind intermediate operators, in construction order, plus the splice partition sizes.
struct AuxiliaryOperators {
  std::vector<std::pair<std::string, QuatMatrix>> named;
  FourTermEquation inner;
  Index p1 = 0;
  Index p3 = 0;

  const QuatMatrix& at(const std::string& name) const;
};

struct SolutionBundle {
  std::vector<QuatMatrix> X;
  // Second expression for the unknown shared by the two halves (X3 in the full systems).
  std::optional<QuatMatrix> X3_alternate;
  FreeParameters free;
  ResidualReport residuals;
  double branch_gap = 0.0;
};

RankCertificate check(const CoupledSystem& sys, const Tolerances& tol = {});
AuxiliaryOperators auxiliary(const CoupledSystem& sys, const Tolerances& tol = {});
ShapeMap shape_query(const CoupledSystem& sys);
// Throws Inconsistent when the projector route rejects the system, ShapeError on bad parameters.
// Special kinds are forwarded to solve_special.
SolutionBundle solve(const CoupledSystem& sys, const FreeParameters& free = {}, const Tolerances& tol = {});
SolutionBundle solve_special(const CoupledSystem& sys, const FreeParameters& free = {},
                             const Tolerances& tol = {});

// The full system whose fourth equation is empty and whose first three equations are sys.
CoupledSystem embed_special(const CoupledSystem& sys);

struct GenOptions {
  int max_dim = 4;
  // Every unknown is max_dim x max_dim when false; otherwise sides are uniform in [1, max_dim].
  bool vary_dims = true;
  // Coefficient ranks uniform in [0, min(m, n) - 1] when true, [1, min(m, n)] otherwise.
  bool rank_deficient = true;
  int entry_bound = 2;
};

struct Generated {
  CoupledSystem sys;
  std::vector<QuatMatrix> planted;
};

Generated generate(Kind kind, const GenOptions& opt, unsigned long long seed);

struct Perturbation {
  CoupledSystem sys;
  int equation = 0;  // 0-based
  Index row = 0;
  Index col = 0;
  Quaternion delta;
  // True when R_A e_row and e_col^T L_B are both nonzero, which makes the equation unsolvable.
  bool guaranteed = false;
};

Perturbation perturb(const CoupledSystem& sys, unsigned long long seed, const Tolerances& tol = {});

}  // namespace qsyl
