#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympclif/spinor.hpp"
#include "sympclif/weyl.hpp"

namespace sympclif {

// Every named operator. Indexed families carry one or two indices:
//   Xjk/Yjk/Zjk : mixed base/fiber metaplectic generators, j,k in 1..n
//   Zreal       : the kernel-raising operators Z_l, l in 1..2n
//   Dx/Dy       : coordinate derivatives, j in 1..n
// The complex-coordinate forms (Ht, Xt, Yt, Z1, Z2, Dz, Dzbar) require n = 1
// and are built directly in the x,y generators via dz = (dx - i dy)/2,
// dzbar = (dx + i dy)/2, z = x + iy, zbar = x - iy.
enum class OpKind {
    Ds, Xs, E,
    Xjk, Yjk, Zjk,
    Xtilde, Ytilde, Htilde,
    Ht, Xt, Yt,
    Zreal,
    Z1, Z2,
    Dx, Dy, Dz, Dzbar,
};

struct OpName {
    OpKind kind;
    int j = 0;
    int k = 0;

    OpName(OpKind kk) : kind(kk) {}
    OpName(OpKind kk, int jj) : kind(kk), j(jj) {}
    OpName(OpKind kk, int jj, int kk2) : kind(kk), j(jj), k(kk2) {}
};

WeylElement build(const OpName& name, int n);

// Spelling used by the CLI and the expression parser ("Ds", "Z1", "Ht", ...).
// Indexed families render as X(j,k), Z(l), Dx(j).
std::string op_spelling(const OpName& name);
std::optional<OpKind> op_kind_from_word(const std::string& word);

// E + n (the shifted Euler operator entering every bracket identity).
WeylElement euler_shifted(int n);

// P^s_{h+1} = Id + c XsDs + d Xs^2 Ds^2 with c = 1/(i(h+n)),
// d = -1/((h+n)(2h+2n-1)).
WeylElement projector_P(int h, int n);

// Coefficients a_0..a_k of the monogenic projector sum a_j Xs^j Ds^j, a_0 = 1,
// derived by the triangular solve that forces annihilation of Xs^l m_{k-l}.
std::vector<Scalar> proj_sm_coeffs(int k, int n);

// Symplectic Clifford action: e_j = i q_j, e_{n+j} = dq_j, index 1..2n.
Spinor clifford_mul(int j, const Spinor& s);

// --- matrix realization, used by the bracket cross-checks ---

using RatMatrix = std::vector<std::vector<Rat>>;

// The 2n x 2n matrix of a metaplectic generator (Xjk/Yjk/Zjk only).
RatMatrix sp_matrix(const OpName& name, int n);

// All generators Xjk (j,k), Yjk and Zjk (j <= k).
std::vector<OpName> sp_generators(int n);

// The operator corresponding to a generator under the bracket-compatible
// correspondence: mixed-index Yjk/Zjk enter with a flipped sign, and then
// [psi(A), psi(B)] = -psi([A,B]) holds for all pairs.
WeylElement sp_op_twisted(const OpName& name, int n);

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b);
// Expand m in the generator basis; throws when inconsistent.
std::vector<Rat> mat_expand(const RatMatrix& m, const std::vector<OpName>& basis, int n);

}  // namespace sympclif
