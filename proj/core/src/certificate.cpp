#include "qsyl/certificate.hpp"

#include <algorithm>
#include <random>

#include "qsyl/errors.hpp"

namespace qsyl {

bool RankCertificate::rank_verdict() const {
  return std::all_of(ranks.begin(), ranks.end(), [](const RankCondition& c) { return c.holds(); });
}

bool RankCertificate::projector_verdict() const {
  return std::all_of(projectors.begin(), projectors.end(), [](const ProjectorCondition& c) { return c.holds; });
}

FreeParameters random_parameters(const ShapeMap& shapes, unsigned long long seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  FreeParameters out;
  for (const auto& [name, s] : shapes) {
    QuatMatrix m(s.rows, s.cols);
    for (Index r = 0; r < s.rows; ++r)
      for (Index c = 0; c < s.cols; ++c) {
        const double a0 = d(rng), a1 = d(rng), a2 = d(rng), a3 = d(rng);
        m.set(r, c, {a0, a1, a2, a3});
      }
    out.emplace(name, std::move(m));
  }
  return out;
}

void check_parameter_shapes(const FreeParameters& free, const ShapeMap& shapes) {
  for (const auto& [name, m] : free) {
    const auto it = shapes.find(name);
    if (it == shapes.end()) throw ShapeError("unknown free parameter " + name);
    if (m.shape() != it->second)
      throw ShapeError("free parameter " + name + " must be " + std::to_string(it->second.rows) + "x" +
                       std::to_string(it->second.cols) + ", got " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()));
  }
}

QuatMatrix parameter(const FreeParameters& free, const ShapeMap& shapes, const std::string& name) {
  const auto it = free.find(name);
  if (it != free.end()) return it->second;
  const Shape s = shapes.at(name);
  return QuatMatrix::zeros(s.rows, s.cols);
}

}  // namespace qsyl
