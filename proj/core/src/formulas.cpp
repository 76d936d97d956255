#include "formulas.hpp"

#include "qsyl/errors.hpp"

namespace qsyl::detail {

namespace {

using M = QuatMatrix;

struct Coef {
  M A1, A2, A3, A4, B1, B2, B3, B4, C1, C2, C3, C4;
  explicit Coef(const CoupledSystem& s) {
    A1 = s.A[0], A2 = s.A[1], A3 = s.A[2];
    B1 = s.B[0], B2 = s.B[1], B3 = s.B[2];
    C1 = s.C[0], C2 = s.C[1], C3 = s.C[2];
    if (s.A.size() > 3) A4 = s.A[3], B4 = s.B[3], C4 = s.C[3];
  }
};

class Builder {
 public:
  explicit Builder(AuxiliaryOperators& aux) : aux_(aux) {}
  M put(std::string name, M m) {
    aux_.named.emplace_back(std::move(name), m);
    return m;
  }

 private:
  AuxiliaryOperators& aux_;
};

// Upper-left operators shared by the full systems that chain equations 1 and 2.
struct ChainHead {
  M A21, A11, B11, C11, A44, E1;
};

ChainHead chain_head(const Coef& c, const Ops& o, Builder& b) {
  ChainHead h;
  h.A21 = c.A2 * c.A1;
  const M RA21 = o.R(h.A21), B1p = o.pinv(c.B1), B2p = o.pinv(c.B2), RB1 = o.R(c.B1);
  h.A11 = b.put("A11", RA21 * c.A2);
  h.B11 = b.put("B11", RB1 * o.L(c.B2));
  h.C11 = b.put("C11", RA21 * (c.A2 * o.R(c.A1) * c.C1 * B1p + c.C2) * o.L(c.B2));
  h.A44 = b.put("A44", o.R(h.B11) * RB1 * B2p);
  h.E1 = RA21 * c.C2 * B2p + h.A11 * o.R(c.A1) * c.C1 * B1p * B2p - h.C11 * o.pinv(h.B11) * RB1 * B2p;
  return h;
}

// Common-right head used by sys01 and sys05 (second equation taken first).
struct RightHead {
  M A11, B11, C11, D11;
};

RightHead right_head(const Coef& c, const Ops& o, Builder& b) {
  RightHead h;
  h.A11 = b.put("A11", o.R(c.B2) * c.B1);
  h.B11 = b.put("B11", o.R(c.A1) * c.A2);
  const M LA11 = o.L(h.A11);
  h.C11 = b.put("C11", c.B1 * LA11);
  h.D11 = b.put("D11", o.R(c.A1) * (o.R(c.A2) * c.C2 * o.pinv(c.B2) * c.B1 - c.C1) * LA11);
  return h;
}

M get(const AuxiliaryOperators& aux, const char* name) { return aux.at(name); }

// Pieces of the chain head that depend on the inner solution.
struct ChainTail {
  M X1, X2, X3;
};

ChainTail chain_tail(const Coef& c, const AuxiliaryOperators& aux, const M& W1, const M& W2, const M& W3,
                     const M& W4, const M& W5, const M& W6, const Ops& o) {
  const M A21 = c.A2 * c.A1, A11 = get(aux, "A11"), B11 = get(aux, "B11"), C11 = get(aux, "C11");
  const M RA1 = o.R(c.A1), B1p = o.pinv(c.B1), RB1 = o.R(c.B1);
  const M V1 = o.pinv(A11) * C11 * o.pinv(B11) + o.L(A11) * W2 + W3 * o.R(B11);
  const M H = c.C2 + c.A2 * RA1 * c.C1 * B1p - c.A2 * V1 * RB1;
  const M U1 = o.pinv(A21) * H + W4 * c.B2 + o.L(A21) * W6;
  return {o.pinv(c.A1) * c.C1 + U1 * c.B1 + o.L(c.A1) * W1, -(RA1 * c.C1 * B1p) + c.A1 * U1 + V1 * RB1,
          -(o.R(A21) * H * o.pinv(c.B2)) + A21 * W4 + W5 * o.R(c.B2)};
}

struct RightTail {
  M X1, X2, X3;
};

RightTail right_tail(const Coef& c, const AuxiliaryOperators& aux, const M& W1, const M& W2, const M& W3,
                     const M& W4, const M& W5, const M& W6, const Ops& o) {
  const M A11 = get(aux, "A11"), B11 = get(aux, "B11"), C11 = get(aux, "C11"), D11 = get(aux, "D11");
  const M RA2C2B2p = o.R(c.A2) * c.C2 * o.pinv(c.B2);
  const M U1 = o.pinv(B11) * D11 * o.pinv(C11) + o.L(B11) * W2 + W3 * o.R(C11);
  const M G = c.C1 - RA2C2B2p * c.B1 + c.A2 * U1 * c.B1;
  const M V1 = -(o.R(c.A1) * G * o.pinv(A11)) + c.A1 * W4 + W5 * o.R(A11);
  return {o.pinv(c.A1) * G + W4 * A11 + o.L(c.A1) * W6, -RA2C2B2p + c.A2 * U1 + V1 * o.R(c.B2),
          o.pinv(c.A2) * c.C2 + U1 * c.B2 + o.L(c.A2) * W1};
}

AuxiliaryOperators aux_sys01(const Coef& c, const Ops& o) {
  AuxiliaryOperators aux;
  Builder b(aux);
  const RightHead h = right_head(c, o, b);
  const M A43 = c.A4 * c.A3, RA43 = o.R(A43);
  b.put("A22", RA43 * c.A4);
  b.put("B22", o.R(c.B3) * o.L(c.B4));
  b.put("C22", RA43 * (c.A4 * o.R(c.A3) * c.C3 * o.pinv(c.B3) + c.C4) * o.L(c.B4));
  const M A33 = b.put("A33", hcat(o.L(c.A2), -o.L(c.A3)));
  const M B33 = b.put("B33", vcat(o.R(h.C11) * c.B2, -(c.B4 * c.B3)));
  const M A44 = b.put("A44", -o.L(A43));
  const M E1 = b.put("E1", o.pinv(c.A3) * c.C3 + o.pinv(A43) * (c.C4 * c.B3 + c.A4 * o.R(c.A3) * c.C3) -
                               o.pinv(c.A2) * c.C2 - o.pinv(h.B11) * h.D11 * o.pinv(h.C11) * c.B2);
  aux.inner = {A33, B33, o.L(h.B11), c.B2, A44, c.B3, E1};
  aux.p1 = c.A2.cols();
  aux.p3 = c.B1.rows();
  return aux;
}

AuxiliaryOperators aux_sys02(const Coef& c, const Ops& o) {
  AuxiliaryOperators aux;
  Builder b(aux);
  const ChainHead h = chain_head(c, o, b);
  const M A22 = b.put("A22", o.R(c.B3) * c.B4);
  const M B22 = b.put("B22", o.R(c.A4) * c.A3);
  const M LA22 = o.L(A22);
  const M C22 = b.put("C22", c.B4 * LA22);
  const M D22 = b.put("D22", o.R(c.A4) * (o.R(c.A3) * c.C3 * o.pinv(c.B3) * c.B4 - c.C4) * LA22);
  const M A33 = b.put("A33", hcat(h.A21, -o.L(c.A3)));
  const M B33 = b.put("B33", vcat(o.R(c.B2), -(o.R(C22) * c.B3)));
  const M B44 = b.put("B44", -o.L(B22));
  const M E1 = b.put("E1", o.pinv(c.A3) * c.C3 + o.pinv(B22) * D22 * o.pinv(C22) * c.B3 + h.E1);
  aux.inner = {A33, B33, h.A11, h.A44, B44, c.B3, E1};
  aux.p1 = c.A1.cols();
  aux.p3 = c.B2.rows();
  return aux;
}

AuxiliaryOperators aux_sys03(const Coef& c, const Ops& o) {
  AuxiliaryOperators aux;
  Builder b(aux);
  const ChainHead h = chain_head(c, o, b);
  const M A34 = c.A3 * c.A4, RA34 = o.R(A34), B3p = o.pinv(c.B3), B4p = o.pinv(c.B4), RB4 = o.R(c.B4);
  const M A22 = b.put("A22", RA34 * c.A3);
  const M B22 = b.put("B22", RB4 * o.L(c.B3));
  const M C22 = b.put("C22", RA34 * (c.A3 * o.R(c.A4) * c.C4 * B4p + c.C3) * o.L(c.B3));
  const M A33 = b.put("A33", hcat(h.A21, -A34));
  const M B33 = b.put("B33", vcat(o.R(c.B2), -o.R(c.B3)));
  const M B44 = b.put("B44", o.R(B22) * RB4 * B3p);
  const M E1 = b.put("E1", h.E1 - RA34 * c.C3 * B3p - A22 * o.R(c.A4) * c.C4 * B4p * B3p +
                               C22 * o.pinv(B22) * RB4 * B3p);
  aux.inner = {A33, B33, h.A11, h.A44, -A22, B44, E1};
  aux.p1 = c.A1.cols();
  aux.p3 = c.B2.rows();
  return aux;
}

AuxiliaryOperators aux_sys04(const Coef& c, const Ops& o) {
  AuxiliaryOperators aux;
  Builder b(aux);
  const ChainHead h = chain_head(c, o, b);
  const M A43 = c.A4 * c.A3, RA43 = o.R(A43), A43p = o.pinv(A43);
  b.put("A22", RA43 * c.A4);
  b.put("B22", o.R(c.B3) * o.L(c.B4));
  b.put("C22", RA43 * (c.A4 * o.R(c.A3) * c.C3 * o.pinv(c.B3) + c.C4) * o.L(c.B4));
  const M A33 = b.put("A33", hcat(h.A21, -o.L(c.A3)));
  const M B33 = b.put("B33", vcat(o.R(c.B2), -(c.B4 * c.B3)));
  const M B44 = b.put("B44", -o.L(A43));
  const M E1 = b.put("E1", o.pinv(c.A3) * c.C3 + A43p * c.C4 * c.B3 + A43p * c.A4 * o.R(c.A3) * c.C3 + h.E1);
  aux.inner = {A33, B33, h.A11, h.A44, B44, c.B3, E1};
  aux.p1 = c.A1.cols();
  aux.p3 = c.B2.rows();
  return aux;
}

AuxiliaryOperators aux_sys05(const Coef& c, const Ops& o) {
  AuxiliaryOperators aux;
  Builder b(aux);
  const RightHead h = right_head(c, o, b);
  const M A4L = c.A4 * o.L(c.A3), RA4L = o.R(A4L);
  const M A22 = b.put("A22", RA4L * c.A4);
  const M B22 = b.put("B22", c.B3 * o.L(c.B4));
  const M C22 = b.put("C22", RA4L * (c.C4 - c.A4 * o.pinv(c.A3) * c.C3) * o.L(c.B4));
  const M A33 = b.put("A33", hcat(o.L(c.A2), -(c.A3 * o.L(A22))));
  const M B33 = b.put("B33", vcat(o.R(h.C11) * c.B2, -o.R(c.B3)));
  const M E1 = b.put("E1", -(o.R(c.A3) * c.C3 * o.pinv(c.B3)) + c.A3 * o.pinv(A22) * C22 * o.pinv(B22) -
                               o.pinv(c.A2) * c.C2 - o.pinv(h.B11) * h.D11 * o.pinv(h.C11) * c.B2);
  aux.inner = {A33, B33, o.L(h.B11), c.B2, -c.A3, o.R(B22), E1};
  aux.p1 = c.A2.cols();
  aux.p3 = c.B1.rows();
  return aux;
}

AuxiliaryOperators aux_special(Kind kind, const Coef& c, const Ops& o) {
  AuxiliaryOperators aux;
  Builder b(aux);
  const M RA1C1B1p = o.R(c.A1) * c.C1 * o.pinv(c.B1);
  switch (kind) {
    case Kind::special01: {
      const M C4 = b.put("C4", c.C2 - c.A2 * o.pinv(c.A3) * c.C3 - RA1C1B1p * c.B2);
      const M A4 = b.put("A4", c.A2 * o.L(c.A3));
      const M B4 = b.put("B4", o.R(c.B1) * c.B2);
      aux.inner = {A4, B4, c.A2, c.B3, c.A1, c.B2, C4};
      break;
    }
    case Kind::special02: {
      const M C4 = b.put("C4", c.C2 + o.pinv(c.A3) * c.C3 * c.B2 + c.A2 * RA1C1B1p);
      aux.inner = {c.A2 * c.A1, c.B3 * c.B2, c.A2, o.R(c.B1), o.L(c.A3), c.B2, C4};
      break;
    }
    case Kind::special03: {
      const M C4 = b.put("C4", c.C2 + c.A2 * RA1C1B1p - o.R(c.A3) * c.C3 * o.pinv(c.B3) * c.B2);
      aux.inner = {c.A2 * c.A1, o.R(c.B3) * c.B2, c.A2, o.R(c.B1), c.A3, c.B2, C4};
      break;
    }
    default: throw std::logic_error("not a special kind");
  }
  return aux;
}

ProjectorCondition pc(std::string id, const M& v, const Ops& o, double scale) {
  return projector_condition(std::move(id), v, o, scale);
}

}  // namespace

AuxiliaryOperators build_aux(const CoupledSystem& sys, const Ops& o) {
  const Coef c(sys);
  switch (sys.kind) {
    case Kind::sys01: return aux_sys01(c, o);
    case Kind::sys02: return aux_sys02(c, o);
    case Kind::sys03: return aux_sys03(c, o);
    case Kind::sys04: return aux_sys04(c, o);
    case Kind::sys05: return aux_sys05(c, o);
    default: return aux_special(sys.kind, c, o);
  }
}

std::vector<ProjectorCondition> outer_conditions(const CoupledSystem& sys, const AuxiliaryOperators& aux,
                                                 const Ops& o, double scale) {
  const Coef c(sys);
  auto single = [&](int i, const M& A, const M& B, const M& C) {
    const std::string n = std::to_string(i);
    return pc("R(A" + n + ")C" + n + "L(B" + n + ")", o.R(A) * C * o.L(B), o, scale);
  };
  switch (sys.kind) {
    case Kind::sys01:
    case Kind::sys05: {
      const M D11 = aux.at("D11"), A22 = aux.at("A22"), C22 = aux.at("C22");
      return {single(2, c.A2, c.B2, c.C2),
              pc("D11L(C11)", D11 * o.L(aux.at("C11")), o, scale),
              pc("R(B11)D11", o.R(aux.at("B11")) * D11, o, scale),
              single(3, c.A3, c.B3, c.C3),
              pc("R(A22)C22", o.R(A22) * C22, o, scale),
              pc("C22L(B22)", C22 * o.L(aux.at("B22")), o, scale)};
    }
    case Kind::sys02: {
      const M C11 = aux.at("C11"), D22 = aux.at("D22");
      return {single(1, c.A1, c.B1, c.C1),
              pc("R(A11)C11", o.R(aux.at("A11")) * C11, o, scale),
              pc("C11L(B11)", C11 * o.L(aux.at("B11")), o, scale),
              single(3, c.A3, c.B3, c.C3),
              pc("R(B22)D22", o.R(aux.at("B22")) * D22, o, scale),
              pc("D22L(C22)", D22 * o.L(aux.at("C22")), o, scale)};
    }
    case Kind::sys03:
    case Kind::sys04: {
      const M C11 = aux.at("C11"), C22 = aux.at("C22");
      std::vector<ProjectorCondition> out{single(1, c.A1, c.B1, c.C1),
                                          pc("R(A11)C11", o.R(aux.at("A11")) * C11, o, scale),
                                          pc("C11L(B11)", C11 * o.L(aux.at("B11")), o, scale)};
      out.push_back(sys.kind == Kind::sys03 ? single(4, c.A4, c.B4, c.C4) : single(3, c.A3, c.B3, c.C3));
      out.push_back(pc("R(A22)C22", o.R(aux.at("A22")) * C22, o, scale));
      out.push_back(pc("C22L(B22)", C22 * o.L(aux.at("B22")), o, scale));
      return out;
    }
    default:
      return {single(1, c.A1, c.B1, c.C1), single(3, c.A3, c.B3, c.C3)};
  }
}

ShapeMap outer_shapes(Kind kind, const std::vector<Shape>& u) {
  auto rc = [&](int a, int b) { return Shape{u[static_cast<size_t>(a)].rows, u[static_cast<size_t>(b)].cols}; };
  const Shape x1 = u[0], x2 = u[1], x4 = u[3];
  switch (kind) {
    case Kind::sys01:
      return {{"W4", rc(0, 1)}, {"W5", x2}, {"W6", x1}, {"T2", x4}, {"T3", x4}, {"T5", u[4]}};
    case Kind::sys02:
      return {{"W1", x1}, {"W2", x2}, {"W6", rc(0, 1)}, {"T4", rc(4, 3)}, {"T5", x4}, {"T6", u[4]}};
    case Kind::sys03:
      return {{"W1", x1}, {"W2", x2}, {"W6", rc(0, 1)}, {"T1", u[4]}, {"T2", x4}, {"T6", rc(4, 3)}};
    case Kind::sys04:
      return {{"W1", x1}, {"W2", x2}, {"W6", rc(0, 1)}, {"T2", x4}, {"T3", x4}, {"T5", u[4]}};
    case Kind::sys05:
      return {{"W4", rc(0, 1)}, {"W5", x2}, {"W6", x1}, {"T1", rc(3, 4)}, {"T2", x4}, {"T3", u[4]}};
    case Kind::special01:
    case Kind::special02:
      return {{"U2", x1}, {"V3", x4}};
    case Kind::special03:
      return {{"U2", x1}, {"V2", x4}};
  }
  return {};
}

Assembled assemble(const CoupledSystem& sys, const AuxiliaryOperators& aux, const FourTermSolution& in,
                   const FreeParameters& free, const ShapeMap& shapes, const Ops& o) {
  const Coef c(sys);
  auto F = [&](const char* name) { return parameter(free, shapes, name); };
  // Selector blocks of the inner unknowns: X1 = [top; bottom], X2 = [left, right].
  const M top = in.X1.top_rows(aux.p1), bottom = in.X1.bottom_rows(in.X1.rows() - aux.p1);
  const M left = in.X2.left_cols(aux.p3), right = in.X2.right_cols(in.X2.cols() - aux.p3);
  const M RA3C3B3p = o.R(c.A3) * c.C3 * o.pinv(c.B3);

  switch (sys.kind) {
    case Kind::sys01: {
      const M &W1 = top, &T1 = bottom, &W3 = left, &T4 = right, &W2 = in.X3, &T6 = in.X4;
      const RightTail t = right_tail(c, aux, W1, W2, W3, F("W4"), F("W5"), F("W6"), o);
      const M A43 = c.A4 * c.A3, A22 = aux.at("A22"), B22 = aux.at("B22");
      const M V2 = o.pinv(A22) * aux.at("C22") * o.pinv(B22) + o.L(A22) * F("T2") + F("T3") * o.R(B22);
      const M H = c.C4 + c.A4 * RA3C3B3p - c.A4 * V2 * o.R(c.B3);
      const M U2 = o.pinv(A43) * H + T4 * c.B4 + o.L(A43) * T6;
      const M X4 = -RA3C3B3p + c.A3 * U2 + V2 * o.R(c.B3);
      const M X5 = -(o.R(A43) * H * o.pinv(c.B4)) + A43 * T4 + F("T5") * o.R(c.B4);
      return {{t.X1, t.X2, t.X3, X4, X5}, o.pinv(c.A3) * c.C3 + U2 * c.B3 + o.L(c.A3) * T1};
    }
    case Kind::sys02: {
      const M &W4 = top, &T1 = bottom, &W5 = left, &T3 = right, &W3 = in.X3, &T2 = in.X4;
      const ChainTail t = chain_tail(c, aux, F("W1"), F("W2"), W3, W4, W5, F("W6"), o);
      const M A22 = aux.at("A22"), B22 = aux.at("B22"), C22 = aux.at("C22");
      const M U2 = o.pinv(B22) * aux.at("D22") * o.pinv(C22) + o.L(B22) * T2 + T3 * o.R(C22);
      const M K = c.C4 - RA3C3B3p * c.B4 + c.A3 * U2 * c.B4;
      const M T4 = F("T4");
      const M V2 = -(o.R(c.A4) * K * o.pinv(A22)) + c.A4 * T4 + F("T5") * o.R(A22);
      const M X4 = -RA3C3B3p + c.A3 * U2 + V2 * o.R(c.B3);
      const M X5 = o.pinv(c.A4) * K + T4 * A22 + o.L(c.A4) * F("T6");
      return {{t.X1, t.X2, t.X3, X4, X5}, o.pinv(c.A3) * c.C3 + U2 * c.B3 + o.L(c.A3) * T1};
    }
    case Kind::sys03: {
      const M &W4 = top, &T4 = bottom, &W5 = left, &T5 = right, &W3 = in.X3, &T3 = in.X4;
      const ChainTail t = chain_tail(c, aux, F("W1"), F("W2"), W3, W4, W5, F("W6"), o);
      const M A34 = c.A3 * c.A4, A22 = aux.at("A22"), B22 = aux.at("B22");
      const M RA4C4B4p = o.R(c.A4) * c.C4 * o.pinv(c.B4);
      const M V2 = o.pinv(A22) * aux.at("C22") * o.pinv(B22) + o.L(A22) * F("T2") + T3 * o.R(B22);
      const M H = c.C3 + c.A3 * RA4C4B4p - c.A3 * V2 * o.R(c.B4);
      const M U2 = o.pinv(A34) * H + T4 * c.B3 + o.L(A34) * F("T6");
      const M X5 = o.pinv(c.A4) * c.C4 + U2 * c.B4 + o.L(c.A4) * F("T1");
      const M X4 = -RA4C4B4p + c.A4 * U2 + V2 * o.R(c.B4);
      return {{t.X1, t.X2, t.X3, X4, X5}, -(o.R(A34) * H * o.pinv(c.B3)) + A34 * T4 + T5 * o.R(c.B3)};
    }
    case Kind::sys04: {
      const M &W4 = top, &T1 = bottom, &W5 = left, &T4 = right, &W3 = in.X3, &T6 = in.X4;
      const ChainTail t = chain_tail(c, aux, F("W1"), F("W2"), W3, W4, W5, F("W6"), o);
      const M A43 = c.A4 * c.A3, A22 = aux.at("A22"), B22 = aux.at("B22");
      const M V2 = o.pinv(A22) * aux.at("C22") * o.pinv(B22) + o.L(A22) * F("T2") + F("T3") * o.R(B22);
      const M H = c.C4 + c.A4 * RA3C3B3p - c.A4 * V2 * o.R(c.B3);
      const M U2 = o.pinv(A43) * H + T4 * c.B4 + o.L(A43) * T6;
      const M X4 = -RA3C3B3p + c.A3 * U2 + V2 * o.R(c.B3);
      const M X5 = -(o.R(A43) * H * o.pinv(c.B4)) + A43 * T4 + F("T5") * o.R(c.B4);
      return {{t.X1, t.X2, t.X3, X4, X5}, o.pinv(c.A3) * c.C3 + U2 * c.B3 + o.L(c.A3) * T1};
    }
    case Kind::sys05: {
      const M &W1 = top, &T4 = bottom, &W3 = left, &T6 = right, &W2 = in.X3, &T5 = in.X4;
      const RightTail t = right_tail(c, aux, W1, W2, W3, F("W4"), F("W5"), F("W6"), o);
      const M A4L = c.A4 * o.L(c.A3), A22 = aux.at("A22"), B22 = aux.at("B22");
      const M V2 = o.pinv(A22) * aux.at("C22") * o.pinv(B22) + o.L(A22) * T4 + T5 * o.R(B22);
      const M K = c.C4 - c.A4 * o.pinv(c.A3) * c.C3 - c.A4 * V2 * c.B3;
      const M T1 = F("T1");
      const M U2 = o.pinv(A4L) * K + T1 * c.B4 + o.L(A4L) * F("T2");
      const M X4 = o.pinv(c.A3) * c.C3 + V2 * c.B3 + o.L(c.A3) * U2;
      const M X5 = -(o.R(A4L) * K * o.pinv(c.B4)) + A4L * T1 + F("T3") * o.R(c.B4);
      return {{t.X1, t.X2, t.X3, X4, X5}, -RA3C3B3p + c.A3 * V2 + T6 * o.R(c.B3)};
    }
    default: break;
  }

  // Three-equation kinds: the inner unknowns map straight onto U1, U3, V1 and V2 or V3.
  const M RA1C1B1p = o.R(c.A1) * c.C1 * o.pinv(c.B1);
  const M A3pC3 = o.pinv(c.A3) * c.C3;
  const M U2 = F("U2");
  auto xy = [&](const M& U1, const M& U3) {
    return std::pair{o.pinv(c.A1) * c.C1 - U1 * c.B1 - o.L(c.A1) * U2, -RA1C1B1p - c.A1 * U1 - U3 * o.R(c.B1)};
  };
  switch (sys.kind) {
    case Kind::special01: {
      const M &V2 = in.X1, &U3 = in.X2, &V1 = in.X3, &U1 = in.X4;
      const auto [X, Y] = xy(U1, U3);
      return {{X, Y, A3pC3 + V1 * c.B3 + o.L(c.A3) * V2, -RA3C3B3p + c.A3 * V1 + F("V3") * o.R(c.B3)}, {}};
    }
    case Kind::special02: {
      const M U1 = -in.X1, &V1 = in.X2, U3 = -in.X3, &V2 = in.X4;
      const auto [X, Y] = xy(U1, U3);
      return {{X, Y, A3pC3 - V1 * c.B3 - o.L(c.A3) * V2, -RA3C3B3p - c.A3 * V1 - F("V3") * o.R(c.B3)}, {}};
    }
    case Kind::special03: {
      const M U1 = -in.X1, &V3 = in.X2, U3 = -in.X3, &V1 = in.X4;
      const auto [X, Y] = xy(U1, U3);
      return {{X, Y, -RA3C3B3p - c.A3 * V1 - V3 * o.R(c.B3), A3pC3 - V1 * c.B3 - o.L(c.A3) * F("V2")}, {}};
    }
    default: break;
  }
  throw std::logic_error("unhandled kind");
}

}  // namespace qsyl::detail
