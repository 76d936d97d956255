#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsyl/matrix.hpp"

namespace qsyl {

// Named free-parameter matrices; a missing name means the zero matrix of the required shape.
using FreeParameters = std::map<std::string, QuatMatrix>;
using ShapeMap = std::map<std::string, Shape>;

struct RankCondition {
  std::string id;
  long lhs = 0;
  long rhs = 0;
  bool holds() const { return lhs == rhs; }
};

struct ProjectorCondition {
  std::string id;
  double residual = 0.0;
  bool holds = true;
};

struct RankCertificate {
  std::vector<RankCondition> ranks;
  std::vector<ProjectorCondition> projectors;

  bool rank_verdict() const;
  bool projector_verdict() const;
  // Both routes must agree for a consistent verdict.
  bool consistent() const { return rank_verdict() && projector_verdict(); }
  bool routes_agree() const { return rank_verdict() == projector_verdict(); }
};

// Fills every shape in the map with small random integer entries in [lo, hi].
FreeParameters random_parameters(const ShapeMap& shapes, unsigned long long seed, int lo = -2, int hi = 2);

// Throws ShapeError if a supplied parameter is unknown or has the wrong shape.
void check_parameter_shapes(const FreeParameters& free, const ShapeMap& shapes);

// The supplied matrix, or zeros of the mapped shape.
QuatMatrix parameter(const FreeParameters& free, const ShapeMap& shapes, const std::string& name);

}  // namespace qsyl
