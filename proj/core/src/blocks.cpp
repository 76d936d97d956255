#include "qsyl/blocks.hpp"

#include "qsyl/equations.hpp"
#include "qsyl/errors.hpp"

namespace qsyl {

RankCondition two_by_two_condition(std::string id, const QuatMatrix& G, const QuatMatrix& A,
                                   const QuatMatrix& B, const Ops& ops) {
  const QuatMatrix lhs = grid({{G, A}, {B, zeros_like(B, A)}});
  return {std::move(id), ops.rank(lhs), static_cast<long>(ops.rank(A)) + ops.rank(B)};
}

ProjectorCondition projector_condition(std::string id, const QuatMatrix& value, const Ops& ops, double scale) {
  const double r = value.frobenius();
  return {std::move(id), r, r <= ops.tolerances().cond_tol * scale};
}

// ---------------------------------------------------------------- single equation

ShapeMap single_shapes(const QuatMatrix& A, const QuatMatrix& B, const QuatMatrix& C) {
  const auto s = infer_shapes({{&A, &B, &C, 0, 1}}, 2);
  return {{"U", {s[0].rows, s[1].cols}}, {"W", s[0]}, {"V", s[1]}};
}

SingleSolution solve_single(const QuatMatrix& A, const QuatMatrix& B, const QuatMatrix& C,
                            const FreeParameters& free, const Tolerances& tol) {
  const ShapeMap shapes = single_shapes(A, B, C);
  check_parameter_shapes(free, shapes);
  const double scale = scale_of({&A, &B, &C});
  const Ops o(tol, tol.zero_rtol * scale);
  const QuatMatrix Ap = o.pinv(A), Bp = o.pinv(B), RA = o.R(A);
  if (!projector_condition("", RA * C * o.L(B), o, scale).holds)
    throw Inconsistent("A X - Y B = C has no solution");
  const QuatMatrix U = parameter(free, shapes, "U");
  return {Ap * C + U * B + o.L(A) * parameter(free, shapes, "W"),
          -(RA * C * Bp) + A * U + parameter(free, shapes, "V") * o.R(B)};
}

// ---------------------------------------------------------------- pairs

const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::common_right: return "common_right";
    case PairKind::chain: return "chain";
    case PairKind::common_left: return "common_left";
  }
  return "?";
}

namespace {

std::vector<OneSided> pair_equations(const PairSystem& s) {
  switch (s.kind) {
    case PairKind::common_right: return {{&s.A1, &s.B1, &s.C1, 0, 1}, {&s.A2, &s.B2, &s.C2, 2, 1}};
    case PairKind::chain: return {{&s.A1, &s.B1, &s.C1, 0, 1}, {&s.A2, &s.B2, &s.C2, 1, 2}};
    case PairKind::common_left: return {{&s.A1, &s.B1, &s.C1, 0, 1}, {&s.A2, &s.B2, &s.C2, 0, 2}};
  }
  return {};
}

struct PairAux {
  // common_right: D1, A, B, C. chain / common_left: A11, B11, C11 (stored in A, B, C).
  QuatMatrix D1, A, B, C;
};

PairAux pair_aux(const PairSystem& s, const Ops& o) {
  const auto& [kind, A1, B1, C1, A2, B2, C2] = s;
  PairAux x;
  switch (kind) {
    case PairKind::common_right: {
      x.D1 = o.R(B1) * B2;
      const QuatMatrix LD = o.L(x.D1);
      x.A = o.R(A2) * A1;
      x.B = B2 * LD;
      x.C = o.R(A2) * (o.R(A1) * C1 * o.pinv(B1) * B2 - C2) * LD;
      break;
    }
    case PairKind::chain: {
      const QuatMatrix A21 = A2 * A1, R21 = o.R(A21);
      x.A = R21 * A2;
      x.B = o.R(B1) * o.L(B2);
      x.C = R21 * (A2 * o.R(A1) * C1 * o.pinv(B1) + C2) * o.L(B2);
      break;
    }
    case PairKind::common_left: {
      const QuatMatrix AL = A2 * o.L(A1), RAL = o.R(AL);
      x.A = RAL * A2;
      x.B = B1 * o.L(B2);
      x.C = RAL * (C2 - A2 * o.pinv(A1) * C1) * o.L(B2);
      break;
    }
  }
  return x;
}

}  // namespace

std::vector<Shape> PairSystem::unknown_shapes() const { return infer_shapes(pair_equations(*this), 3); }

double PairSystem::scale() const { return scale_of({&A1, &B1, &C1, &A2, &B2, &C2}); }

std::vector<double> pair_residuals(const PairSystem& sys, const QuatMatrix& X1, const QuatMatrix& X2,
                                   const QuatMatrix& X3) {
  return one_sided_residuals(pair_equations(sys), {X1, X2, X3});
}

RankCertificate check_pair(const PairSystem& s, const Tolerances& tol) {
  s.unknown_shapes();
  const double scale = s.scale();
  const Ops o(tol, tol.zero_rtol * scale);
  const auto& [kind, A1, B1, C1, A2, B2, C2] = s;
  RankCertificate cert;
  cert.ranks.push_back(two_by_two_condition("eq1", C1, A1, B1, o));
  cert.ranks.push_back(two_by_two_condition("eq2", C2, A2, B2, o));
  switch (kind) {
    case PairKind::common_right: {
      const QuatMatrix lhs = grid({{B2, B1, zeros_like(B2, A1), zeros_like(B2, A2)}, {C2, C1, A1, A2}});
      cert.ranks.push_back({"row[1|2]", o.rank(lhs), static_cast<long>(o.rank(hcat(A1, A2))) + o.rank(hcat(B1, B2))});
      break;
    }
    case PairKind::chain: {
      const QuatMatrix A21 = A2 * A1, B21 = B2 * B1;
      const QuatMatrix lhs = grid({{A21, A2 * C1 + C2 * B1}, {zeros_like(B21, A21), B21}});
      cert.ranks.push_back({"chain[1-2]", o.rank(lhs), static_cast<long>(o.rank(A21)) + o.rank(B21)});
      break;
    }
    case PairKind::common_left: {
      const QuatMatrix lhs = grid({{C1, A1}, {C2, A2}, {B1, zeros_like(B1, A1)}, {B2, zeros_like(B2, A1)}});
      cert.ranks.push_back({"col[1;2]", o.rank(lhs), static_cast<long>(o.rank(vcat(A1, A2))) + o.rank(vcat(B1, B2))});
      break;
    }
  }
  const PairAux x = pair_aux(s, o);
  cert.projectors.push_back(projector_condition("R(A1)C1L(B1)", o.R(A1) * C1 * o.L(B1), o, scale));
  const bool short_names = kind == PairKind::common_right;
  cert.projectors.push_back(projector_condition(short_names ? "R(A)C" : "R(A11)C11", o.R(x.A) * x.C, o, scale));
  cert.projectors.push_back(projector_condition(short_names ? "CL(B)" : "C11L(B11)", x.C * o.L(x.B), o, scale));
  return cert;
}

ShapeMap pair_shapes(const PairSystem& s) {
  const auto u = s.unknown_shapes();
  const Index n1 = u[0].rows, q1 = u[0].cols, p1 = u[1].rows, r1 = u[1].cols;
  switch (s.kind) {
    case PairKind::common_right:
      return {{"W1", u[0]}, {"W2", {n1, r1}}, {"W3", {n1, r1}}, {"W4", {u[2].rows, r1}},
              {"W5", {p1, r1}}, {"W6", u[2]}};
    case PairKind::chain:
      return {{"W1", u[0]}, {"W2", u[1]}, {"W3", u[1]}, {"W4", {n1, u[2].cols}},
              {"W5", u[2]}, {"W6", {n1, r1}}};
    case PairKind::common_left:
      return {{"W1", {n1, u[2].cols}}, {"W2", {n1, q1}}, {"W3", u[2]}, {"W4", {n1, r1}},
              {"W5", {n1, r1}}, {"W6", u[1]}};
  }
  return {};
}

PairSolution solve_pair(const PairSystem& s, const FreeParameters& free, const Tolerances& tol) {
  const ShapeMap shapes = pair_shapes(s);
  check_parameter_shapes(free, shapes);
  if (!check_pair(s, tol).projector_verdict()) throw Inconsistent(std::string(to_string(s.kind)) + " pair has no solution");
  const double scale = s.scale();
  const Ops o(tol, tol.zero_rtol * scale);
  auto W = [&](int k) { return parameter(free, shapes, "W" + std::to_string(k)); };
  const auto& [kind, A1, B1, C1, A2, B2, C2] = s;
  const PairAux x = pair_aux(s, o);
  const QuatMatrix A1p = o.pinv(A1), B1p = o.pinv(B1), RA1 = o.R(A1);
  PairSolution out;
  switch (kind) {
    case PairKind::common_right: {
      const QuatMatrix U1 = o.pinv(x.A) * x.C * o.pinv(x.B) + o.L(x.A) * W(2) + W(3) * o.R(x.B);
      const QuatMatrix K = C2 - RA1 * C1 * B1p * B2 + A1 * U1 * B2;
      const QuatMatrix V1 = -(o.R(A2) * K * o.pinv(x.D1)) + A2 * W(4) + W(5) * o.R(x.D1);
      out.X1 = A1p * C1 + U1 * B1 + o.L(A1) * W(1);
      out.X2 = -(RA1 * C1 * B1p) + A1 * U1 + V1 * o.R(B1);
      out.X3 = o.pinv(A2) * K + W(4) * x.D1 + o.L(A2) * W(6);
      break;
    }
    case PairKind::chain: {
      const QuatMatrix A21 = A2 * A1;
      const QuatMatrix V1 = o.pinv(x.A) * x.C * o.pinv(x.B) + o.L(x.A) * W(2) + W(3) * o.R(x.B);
      const QuatMatrix H = C2 + A2 * RA1 * C1 * B1p - A2 * V1 * o.R(B1);
      const QuatMatrix U1 = o.pinv(A21) * H + W(4) * B2 + o.L(A21) * W(6);
      out.X1 = A1p * C1 + U1 * B1 + o.L(A1) * W(1);
      out.X2 = -(RA1 * C1 * B1p) + A1 * U1 + V1 * o.R(B1);
      out.X3 = -(o.R(A21) * H * o.pinv(B2)) + A21 * W(4) + W(5) * o.R(B2);
      break;
    }
    case PairKind::common_left: {
      const QuatMatrix AL = A2 * o.L(A1);
      const QuatMatrix U1 = o.pinv(x.A) * x.C * o.pinv(x.B) + o.L(x.A) * W(4) + W(5) * o.R(x.B);
      const QuatMatrix K = C2 - A2 * A1p * C1 - A2 * U1 * B1;
      const QuatMatrix U2 = o.pinv(AL) * K + W(1) * B2 + o.L(AL) * W(2);
      out.X1 = A1p * C1 + U1 * B1 + o.L(A1) * U2;
      out.X2 = -(RA1 * C1 * B1p) + A1 * U1 + W(6) * o.R(B1);
      out.X3 = -(o.R(AL) * K * o.pinv(B2)) + AL * W(1) + W(3) * o.R(B2);
      break;
    }
  }
  out.free = free;
  return out;
}

// ---------------------------------------------------------------- four-term equation

std::vector<Shape> FourTermEquation::unknown_shapes() const {
  const Index m = E1.rows(), n = E1.cols();
  auto need = [](bool ok, const char* what) {
    if (!ok) throw ShapeError(std::string("four-term equation: ") + what);
  };
  need(A1.rows() == m && B1.cols() == n, "A1/B1 do not match E1");
  need(C3.rows() == m && D3.cols() == n, "C3/D3 do not match E1");
  need(C4.rows() == m && D4.cols() == n, "C4/D4 do not match E1");
  return {{A1.cols(), n}, {m, B1.rows()}, {C3.cols(), D3.rows()}, {C4.cols(), D4.rows()}};
}

double FourTermEquation::scale() const { return scale_of({&A1, &B1, &C3, &D3, &C4, &D4, &E1}); }

FourTermAux four_term_aux(const FourTermEquation& eq, const Ops& o) {
  FourTermAux x;
  const QuatMatrix RA1 = o.R(eq.A1), LB1 = o.L(eq.B1);
  x.A = RA1 * eq.C3;
  x.B = eq.D3 * LB1;
  x.C = RA1 * eq.C4;
  x.D = eq.D4 * LB1;
  x.E = RA1 * eq.E1 * LB1;
  x.M = o.R(x.A) * x.C;
  x.N = x.D * o.L(x.B);
  x.S = x.C * o.L(x.M);
  return x;
}

std::vector<ProjectorCondition> four_term_conditions(const FourTermAux& x, const Ops& o, double scale,
                                                     const std::string& prefix) {
  return {projector_condition(prefix + "R(M)R(A)E", o.R(x.M) * o.R(x.A) * x.E, o, scale),
          projector_condition(prefix + "EL(B)L(N)", x.E * o.L(x.B) * o.L(x.N), o, scale),
          projector_condition(prefix + "R(A)EL(D)", o.R(x.A) * x.E * o.L(x.D), o, scale),
          projector_condition(prefix + "R(C)EL(B)", o.R(x.C) * x.E * o.L(x.B), o, scale)};
}

ShapeMap four_term_shapes(const FourTermEquation& eq) {
  const auto u = eq.unknown_shapes();
  return {{"T1", u[3]}, {"T2", u[3]}, {"T3", u[3]}, {"T4", u[2]},
          {"T5", u[2]}, {"T6", u[0]}, {"T7", u[1]}, {"T8", u[1]}};
}

FourTermSolution four_term_assemble(const FourTermEquation& eq, const FourTermAux& x, const FreeParameters& T,
                                    const Ops& o) {
  const ShapeMap shapes = four_term_shapes(eq);
  check_parameter_shapes(T, shapes);
  auto t = [&](int k) { return parameter(T, shapes, "T" + std::to_string(k)); };
  const QuatMatrix Ap = o.pinv(x.A), Bp = o.pinv(x.B), Cp = o.pinv(x.C), Dp = o.pinv(x.D);
  const QuatMatrix Mp = o.pinv(x.M), Np = o.pinv(x.N), Sp = o.pinv(x.S);
  const QuatMatrix RN = o.R(x.N), LM = o.L(x.M);
  const QuatMatrix EN = Cp * x.E * Np;
  FourTermSolution s;
  s.X3 = Ap * x.E * Bp - Ap * x.C * Mp * x.E * Bp - Ap * x.S * EN * x.D * Bp - Ap * x.S * t(2) * RN * x.D * Bp +
         o.L(x.A) * t(4) + t(5) * o.R(x.B);
  s.X4 = Mp * x.E * Dp + Sp * x.S * EN + LM * o.L(x.S) * t(1) + LM * t(2) * RN + t(3) * o.R(x.D);
  const QuatMatrix F = eq.E1 - eq.C3 * s.X3 * eq.D3 - eq.C4 * s.X4 * eq.D4;
  const QuatMatrix A1p = o.pinv(eq.A1);
  s.X1 = A1p * F - A1p * t(7) * eq.B1 + o.L(eq.A1) * t(6);
  s.X2 = o.R(eq.A1) * F * o.pinv(eq.B1) + eq.A1 * A1p * t(7) + t(8) * o.R(eq.B1);
  return s;
}

FourTermSolution solve_four_term(const FourTermEquation& eq, const FreeParameters& T, const Tolerances& tol) {
  eq.unknown_shapes();
  const double scale = eq.scale();
  const Ops o(tol, tol.zero_rtol * scale);
  const FourTermAux x = four_term_aux(eq, o);
  for (const auto& c : four_term_conditions(x, o, scale))
    if (!c.holds) throw Inconsistent("four-term equation fails " + c.id);
  return four_term_assemble(eq, x, T, o);
}

double four_term_residual(const FourTermEquation& eq, const FourTermSolution& x) {
  return (eq.A1 * x.X1 + x.X2 * eq.B1 + eq.C3 * x.X3 * eq.D3 + eq.C4 * x.X4 * eq.D4 - eq.E1).frobenius();
}

// ---------------------------------------------------------------- rank identities

RankIdentity rank_identity_check(const QuatMatrix& A, const QuatMatrix& B, const QuatMatrix& C,
                                 const Tolerances& tol) {
  if (A.rows() != B.rows() || A.cols() != C.cols()) throw ShapeError("rank identity operands not conformable");
  const double scale = scale_of({&A, &B, &C});
  const Ops o(tol, tol.zero_rtol * scale);
  const int rA = o.rank(A);
  return {rA + o.rank(o.R(A) * B) == o.rank(hcat(A, B)), rA + o.rank(C * o.L(A)) == o.rank(vcat(A, C))};
}

}  // namespace qsyl
