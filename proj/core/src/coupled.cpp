#include "qsyl/coupled.hpp"

#include <stdexcept>

#include "qsyl/errors.hpp"
#include "formulas.hpp"

namespace qsyl {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::sys01: return "sys01";
    case Kind::sys02: return "sys02";
    case Kind::sys03: return "sys03";
    case Kind::sys04: return "sys04";
    case Kind::sys05: return "sys05";
    case Kind::special01: return "special01";
    case Kind::special02: return "special02";
    case Kind::special03: return "special03";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : all_kinds)
    if (name == to_string(k)) return k;
  return std::nullopt;
}

bool is_special(Kind k) { return k == Kind::special01 || k == Kind::special02 || k == Kind::special03; }

const std::vector<EquationPattern>& pattern(Kind k) {
  static const std::vector<EquationPattern> p01{{0, 1}, {2, 1}, {2, 3}, {3, 4}};
  static const std::vector<EquationPattern> p02{{0, 1}, {1, 2}, {2, 3}, {4, 3}};
  static const std::vector<EquationPattern> p03{{0, 1}, {1, 2}, {3, 2}, {4, 3}};
  static const std::vector<EquationPattern> p04{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  static const std::vector<EquationPattern> p05{{0, 1}, {2, 1}, {3, 2}, {3, 4}};
  static const std::vector<EquationPattern> s01{{0, 1}, {2, 1}, {2, 3}};
  static const std::vector<EquationPattern> s02{{0, 1}, {1, 2}, {2, 3}};
  static const std::vector<EquationPattern> s03{{0, 1}, {1, 2}, {3, 2}};
  switch (k) {
    case Kind::sys01: return p01;
    case Kind::sys02: return p02;
    case Kind::sys03: return p03;
    case Kind::sys04: return p04;
    case Kind::sys05: return p05;
    case Kind::special01: return s01;
    case Kind::special02: return s02;
    case Kind::special03: return s03;
  }
  throw std::logic_error("unknown kind");
}

int equation_count(Kind k) { return static_cast<int>(pattern(k).size()); }

int unknown_count(Kind k) { return is_special(k) ? 4 : 5; }

std::vector<OneSided> CoupledSystem::equations() const {
  const auto& p = pattern(kind);
  const size_t n = p.size();
  if (A.size() != n || B.size() != n || C.size() != n)
    throw ShapeError(std::string(to_string(kind)) + " needs " + std::to_string(n) + " equations");
  std::vector<OneSided> out;
  for (size_t i = 0; i < n; ++i) out.push_back({&A[i], &B[i], &C[i], p[i].left, p[i].right});
  return out;
}

std::vector<Shape> CoupledSystem::unknown_shapes() const { return infer_shapes(equations(), unknown_count(kind)); }

double CoupledSystem::scale() const {
  double m = 0.0;
  for (const auto* v : {&A, &B, &C})
    for (const auto& x : *v) m = std::max(m, x.frobenius());
  return 1.0 + m;
}

CoupledSystem CoupledSystem::zeros(Kind kind, const std::vector<Shape>& u) {
  if (u.size() != static_cast<size_t>(unknown_count(kind))) throw ShapeError("wrong number of unknown shapes");
  CoupledSystem s;
  s.kind = kind;
  for (const auto& [l, r] : pattern(kind)) {
    const Shape xl = u[static_cast<size_t>(l)], xr = u[static_cast<size_t>(r)];
    s.A.push_back(QuatMatrix::zeros(xr.rows, xl.rows));
    s.B.push_back(QuatMatrix::zeros(xr.cols, xl.cols));
    s.C.push_back(QuatMatrix::zeros(xr.rows, xl.cols));
  }
  return s;
}

const QuatMatrix& AuxiliaryOperators::at(const std::string& name) const {
  for (const auto& [n, m] : named)
    if (n == name) return m;
  throw std::out_of_range("no auxiliary operator " + name);
}

namespace {

Ops solver_ops(const CoupledSystem& sys, const Tolerances& tol) {
  tol.validate();
  return Ops(tol, tol.zero_rtol * sys.scale());
}

std::vector<ProjectorCondition> projector_conditions(const CoupledSystem& sys, const AuxiliaryOperators& aux,
                                                     const Ops& o) {
  const double scale = sys.scale();
  auto out = detail::outer_conditions(sys, aux, o, scale);
  for (auto& c : four_term_conditions(four_term_aux(aux.inner, o), o, scale)) out.push_back(std::move(c));
  return out;
}

SolutionBundle solve_any(const CoupledSystem& sys, const FreeParameters& free, const Tolerances& tol) {
  const ShapeMap shapes = shape_query(sys);
  check_parameter_shapes(free, shapes);
  const Ops o = solver_ops(sys, tol);
  const AuxiliaryOperators aux = detail::build_aux(sys, o);
  std::string failed;
  for (const auto& c : projector_conditions(sys, aux, o))
    if (!c.holds) failed += (failed.empty() ? "" : ", ") + c.id;
  if (!failed.empty()) throw Inconsistent(std::string(to_string(sys.kind)) + " has no solution: " + failed + " nonzero");

  FreeParameters T;
  for (int k = 1; k <= 8; ++k) {
    const auto it = free.find("Z" + std::to_string(k));
    if (it != free.end()) T.emplace("T" + std::to_string(k), it->second);
  }
  const FourTermSolution inner = four_term_assemble(aux.inner, four_term_aux(aux.inner, o), T, o);
  detail::Assembled a = detail::assemble(sys, aux, inner, free, shapes, o);

  SolutionBundle out;
  out.X = std::move(a.X);
  out.X3_alternate = std::move(a.X3_alternate);
  out.free = free;
  out.residuals = {one_sided_residuals(sys.equations(), out.X), sys.scale()};
  if (out.X3_alternate) out.branch_gap = (out.X[2] - *out.X3_alternate).frobenius();
  return out;
}

}  // namespace

RankCertificate check(const CoupledSystem& sys, const Tolerances& tol) {
  sys.unknown_shapes();
  const Ops o = solver_ops(sys, tol);
  RankCertificate cert;
  cert.ranks = detail::rank_conditions(sys, o);
  cert.projectors = projector_conditions(sys, detail::build_aux(sys, o), o);
  return cert;
}

AuxiliaryOperators auxiliary(const CoupledSystem& sys, const Tolerances& tol) {
  sys.unknown_shapes();
  return detail::build_aux(sys, solver_ops(sys, tol));
}

ShapeMap shape_query(const CoupledSystem& sys) {
  const auto u = sys.unknown_shapes();
  ShapeMap out = detail::outer_shapes(sys.kind, u);
  // Inner shapes depend only on dimensions, so zero data gives them cheaply.
  const CoupledSystem z = CoupledSystem::zeros(sys.kind, u);
  const AuxiliaryOperators aux = detail::build_aux(z, Ops());
  for (const auto& [name, s] : four_term_shapes(aux.inner)) out.emplace("Z" + name.substr(1), s);
  return out;
}

SolutionBundle solve(const CoupledSystem& sys, const FreeParameters& free, const Tolerances& tol) {
  if (is_special(sys.kind)) return solve_special(sys, free, tol);
  return solve_any(sys, free, tol);
}

SolutionBundle solve_special(const CoupledSystem& sys, const FreeParameters& free, const Tolerances& tol) {
  if (!is_special(sys.kind)) throw ShapeError(std::string(to_string(sys.kind)) + " is not a three-equation kind");
  return solve_any(sys, free, tol);
}

CoupledSystem embed_special(const CoupledSystem& sys) {
  const auto u = sys.unknown_shapes();
  CoupledSystem out = sys;
  switch (sys.kind) {
    case Kind::special01: out.kind = Kind::sys01; break;
    case Kind::special02: out.kind = Kind::sys04; break;
    case Kind::special03: out.kind = Kind::sys03; break;
    default: throw ShapeError(std::string(to_string(sys.kind)) + " is not a three-equation kind");
  }
  // Fourth equation with an empty fifth unknown; X4 is its left unknown except in sys03.
  const Shape x4 = u[3];
  if (out.kind == Kind::sys03) {
    out.A.push_back(QuatMatrix::zeros(x4.rows, 0));
    out.B.push_back(QuatMatrix::zeros(x4.cols, 0));
    out.C.push_back(QuatMatrix::zeros(x4.rows, 0));
  } else {
    out.A.push_back(QuatMatrix::zeros(0, x4.rows));
    out.B.push_back(QuatMatrix::zeros(0, x4.cols));
    out.C.push_back(QuatMatrix::zeros(0, x4.cols));
  }
  return out;
}

}  // namespace qsyl
