#include "formulas.hpp"

namespace qsyl::detail {

namespace {

using M = QuatMatrix;

class Ranker {
 public:
  explicit Ranker(const Ops& o) : o_(o) {}

  void add(std::string id, const M& lhs, std::initializer_list<const M*> parts) {
    long rhs = 0;
    for (const M* p : parts) rhs += o_.rank(*p);
    out.push_back({std::move(id), o_.rank(lhs), rhs});
  }
  // [[G, A], [B, 0]]
  void two(std::string id, const M& G, const M& A, const M& B) {
    out.push_back(two_by_two_condition(std::move(id), G, A, B, o_));
  }
  // [[G1, G2, A1, A2], [B1, B2, 0, 0]]
  void row(std::string id, const M& G1, const M& G2, const M& A1, const M& A2, const M& B1, const M& B2) {
    const M lhs = grid({{G1, G2, A1, A2}, {B1, B2, zeros_like(B1, A1), zeros_like(B1, A2)}});
    const M a = hcat(A1, A2), b = hcat(B1, B2);
    add(std::move(id), lhs, {&a, &b});
  }
  // [[G1, A1], [G2, A2], [B1, 0], [B2, 0]]
  void col(std::string id, const M& G1, const M& A1, const M& G2, const M& A2, const M& B1, const M& B2) {
    const M lhs = grid({{G1, A1}, {G2, A2}, {B1, zeros_like(B1, A1)}, {B2, zeros_like(B2, A1)}});
    const M a = vcat(A1, A2), b = vcat(B1, B2);
    add(std::move(id), lhs, {&a, &b});
  }
  // [[G11, G12, A1, A2], [0, G22, 0, A3], [B1, B2, 0, 0], [0, B3, 0, 0]]
  void upper(std::string id, const M& G11, const M& G12, const M& G22, const M& A1, const M& A2, const M& A3,
             const M& B1, const M& B2, const M& B3) {
    const M lhs = grid({{G11, G12, A1, A2},
                        {zeros_like(G22, G11), G22, zeros_like(G22, A1), A3},
                        {B1, B2, zeros_like(B1, A1), zeros_like(B1, A2)},
                        {zeros_like(B3, B1), B3, zeros_like(B3, A1), zeros_like(B3, A2)}});
    const M a = grid({{A1, A2}, {zeros_like(A3, A1), A3}});
    const M b = grid({{B1, B2}, {zeros_like(B3, B1), B3}});
    add(std::move(id), lhs, {&a, &b});
  }

  std::vector<RankCondition> out;

 private:
  const Ops& o_;
};

}  // namespace

std::vector<RankCondition> rank_conditions(const CoupledSystem& s, const Ops& o) {
  Ranker r(o);
  const auto& A = s.A;
  const auto& B = s.B;
  const auto& C = s.C;
  for (size_t i = 0; i < A.size(); ++i) r.two("eq" + std::to_string(i + 1), C[i], A[i], B[i]);
  // Chain term A_k+1 C_k + C_k+1 B_k, 0-based.
  auto link = [&](size_t k) { return A[k + 1] * C[k] + C[k + 1] * B[k]; };

  switch (s.kind) {
    case Kind::sys01: {
      const M G = A[3] * C[2] + C[3] * B[2], A43 = A[3] * A[2], B43 = B[3] * B[2];
      r.row("row[1|2]", C[0], C[1], A[0], A[1], B[0], B[1]);
      r.two("chain[3-4]", G, A43, B43);
      r.upper("grid[1|2;3-4]", C[0], C[1], G, A[0], A[1], A43, B[0], B[1], B43);
      r.col("col[2;3]", C[1], A[1], C[2], A[2], B[1], B[2]);
      r.upper("grid[1|2;3]", C[0], C[1], C[2], A[0], A[1], A[2], B[0], B[1], B[2]);
      r.col("col[2;3-4]", C[1], A[1], G, A43, B[1], B43);
      break;
    }
    case Kind::sys02: {
      const M T = A[2] * A[1] * C[0] + A[2] * C[1] * B[0] + C[2] * B[1] * B[0];
      const M A321 = A[2] * A[1] * A[0], B321 = B[2] * B[1] * B[0];
      r.two("chain[1-2]", link(0), A[1] * A[0], B[1] * B[0]);
      r.row("row[3|4]", C[2], C[3], A[2], A[3], B[2], B[3]);
      r.row("row[2-3|4]", link(1), C[3], A[2] * A[1], A[3], B[2] * B[1], B[3]);
      r.two("chain[1-3]", T, A321, B321);
      r.two("chain[2-3]", link(1), A[2] * A[1], B[2] * B[1]);
      r.row("row[1-3|4]", T, C[3], A321, A[3], B321, B[3]);
      break;
    }
    case Kind::sys03: {
      const M G12 = link(0), G43 = A[2] * C[3] + C[2] * B[3];
      const M A21 = A[1] * A[0], B21 = B[1] * B[0], A34 = A[2] * A[3], B34 = B[2] * B[3];
      r.two("chain[1-2]", G12, A21, B21);
      r.two("chain[4-3]", G43, A34, B34);
      r.row("row[2|3]", C[1], C[2], A[1], A[2], B[1], B[2]);
      r.row("row[1-2|4-3]", G12, G43, A21, A34, B21, B34);
      r.row("row[2|4-3]", C[1], G43, A[1], A34, B[1], B34);
      r.row("row[1-2|3]", G12, C[2], A21, A[2], B21, B[2]);
      break;
    }
    case Kind::sys04: {
      for (size_t k = 0; k < 3; ++k)
        r.two("chain[" + std::to_string(k + 1) + "-" + std::to_string(k + 2) + "]", link(k), A[k + 1] * A[k],
              B[k + 1] * B[k]);
      for (size_t j = 0; j < 2; ++j) {
        const M G = A[j + 2] * A[j + 1] * C[j] + A[j + 2] * C[j + 1] * B[j] + C[j + 2] * B[j + 1] * B[j];
        r.two("chain[" + std::to_string(j + 1) + "-" + std::to_string(j + 3) + "]", G,
              A[j + 2] * A[j + 1] * A[j], B[j + 2] * B[j + 1] * B[j]);
      }
      const M G = A[3] * A[2] * A[1] * C[0] + A[3] * A[2] * C[1] * B[0] + A[3] * C[2] * B[1] * B[0] +
                  C[3] * B[2] * B[1] * B[0];
      r.two("chain[1-4]", G, A[3] * A[2] * A[1] * A[0], B[3] * B[2] * B[1] * B[0]);
      break;
    }
    case Kind::sys05: {
      const M G = A[1] * C[2] + C[1] * B[2], A23 = A[1] * A[2], B23 = B[1] * B[2];
      r.row("row[1|2]", C[0], C[1], A[0], A[1], B[0], B[1]);
      r.col("col[3;4]", C[2], A[2], C[3], A[3], B[2], B[3]);
      r.row("row[1|3-2]", C[0], G, A[0], A23, B[0], B23);
      r.col("col[3-2;4]", G, A23, C[3], A[3], B23, B[3]);
      r.two("chain[3-2]", G, A23, B23);
      r.upper("grid[1|3-2;4]", C[0], G, C[3], A[0], A23, A[3], B[0], B23, B[3]);
      break;
    }
    case Kind::special01: {
      {
        const M lhs = grid({{A[0], A[1], C[0], C[1]},
                            {zeros_like(B[0], A[0]), zeros_like(B[0], A[1]), B[0], B[1]}});
        const M a = hcat(A[0], A[1]), b = hcat(B[0], B[1]);
        r.add("row[1|2]", lhs, {&a, &b});
      }
      {
        const M lhs = grid({{B[1], zeros_like(B[1], A[1])},
                            {B[2], zeros_like(B[2], A[1])},
                            {C[1], A[1]},
                            {C[2], A[2]}});
        const M a = vcat(A[1], A[2]), b = vcat(B[1], B[2]);
        r.add("col[2;3]", lhs, {&a, &b});
      }
      {
        const M lhs = grid({{C[1], C[0], A[0], A[1]},
                            {C[2], zeros_like(C[2], C[0]), zeros_like(C[2], A[0]), A[2]},
                            {B[1], B[0], zeros_like(B[1], A[0]), zeros_like(B[1], A[1])},
                            {B[2], zeros_like(B[2], B[0]), zeros_like(B[2], A[0]), zeros_like(B[2], A[1])}});
        const M a = grid({{A[0], A[1]}, {zeros_like(A[2], A[0]), A[2]}});
        const M b = grid({{B[1], B[0]}, {B[2], zeros_like(B[2], B[0])}});
        r.add("grid[2|1;3]", lhs, {&a, &b});
      }
      break;
    }
    case Kind::special02: {
      r.two("chain[2-3]", link(1), A[2] * A[1], B[2] * B[1]);
      r.two("chain[1-2]", link(0), A[1] * A[0], B[1] * B[0]);
      r.two("chain[1-3]", A[2] * A[1] * C[0] + A[2] * C[1] * B[0] + C[2] * B[1] * B[0], A[2] * A[1] * A[0],
            B[2] * B[1] * B[0]);
      break;
    }
    case Kind::special03: {
      const M G = link(0), A21 = A[1] * A[0], B21 = B[1] * B[0];
      auto flipped = [&](std::string id, const M& A1, const M& A2, const M& G1, const M& G2, const M& B1,
                         const M& B2) {
        const M lhs = grid({{A1, A2, G1, G2}, {zeros_like(B1, A1), zeros_like(B1, A2), B1, B2}});
        const M a = hcat(A1, A2), b = hcat(B1, B2);
        r.add(std::move(id), lhs, {&a, &b});
      };
      flipped("row[2|3]", A[1], A[2], C[1], C[2], B[1], B[2]);
      r.two("chain[1-2]", G, A21, B21);
      flipped("row[3|1-2]", A[2], A21, C[2], G, B[2], B21);
      break;
    }
  }
  return std::move(r.out);
}

}  // namespace qsyl::detail
