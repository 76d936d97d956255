#pragma once

#include "qsyl/coupled.hpp"

namespace qsyl::detail {

struct Assembled {
  std::vector<QuatMatrix> X;
  std::optional<QuatMatrix> X3_alternate;
};

AuxiliaryOperators build_aux(const CoupledSystem& sys, const Ops& o);
// Conditions on the two halves; the inner four-term conditions are appended by the caller.
std::vector<ProjectorCondition> outer_conditions(const CoupledSystem& sys, const AuxiliaryOperators& aux,
                                                 const Ops& o, double scale);
// Free parameters outside the inner four-term equation, keyed by name.
ShapeMap outer_shapes(Kind kind, const std::vector<Shape>& u);
Assembled assemble(const CoupledSystem& sys, const AuxiliaryOperators& aux, const FourTermSolution& inner,
                   const FreeParameters& free, const ShapeMap& shapes, const Ops& o);

std::vector<RankCondition> rank_conditions(const CoupledSystem& sys, const Ops& o);

}  // namespace qsyl::detail
