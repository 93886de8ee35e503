#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sympclif/spinor.hpp"
#include "sympclif/weyl.hpp"

namespace sympclif {

// Exact pairing value; sqrt2 records the prefactor of the skew form, kept as
// metadata because sqrt(2) is not an element of the coefficient ring.
struct PairingValue {
    Scalar value;
    bool sqrt2 = false;

    std::complex<double> to_float(std::complex<double> alpha_value = {0.0, 0.0}) const;
    bool is_zero() const { return value.is_zero(); }
};

// integral over R of q^(2t) e^{-q^2} dq = tau (2t-1)!! / 2^t  (tau = sqrt(pi)).
Scalar gaussian_moment(int t);
// Same for an arbitrary power m (odd m integrates to zero).
Scalar gaussian_moment_power(int m);
// The formula as printed in the source lemma, tau (2t+1)/2^t; kept only so the
// discrepancy report can show both sides.
Scalar gaussian_moment_as_printed(int t);

// Symplectic Fischer product (n = 1): base pairing f(dy,-dx) g at x=y=0 with
// the left argument's coefficients conjugated, fiber integral against e^{-q^2}.
PairingValue fischer(const Spinor& a, const Spinor& b);
// Same base/fiber recipe without the conjugation; this is the literal bilinear
// reading, which is also the pairing the reproducing kernels live in.
PairingValue fischer_bilinear(const Spinor& a, const Spinor& b);

// Skew form <,>_1: sqrt(2)/h! f(dz,dzbar) g at 0 times the fiber integral of
// (dq psi) phi; requires the left argument base-homogeneous (degree h).
PairingValue fischer1(const Spinor& a, const Spinor& b);

// Two-point kernel: polynomial in (xi1, xi2) and (x, y) whose coefficients are
// Weyl elements in q, dq (n = 1); x and y never appear differentiated.
struct TwoPointKernel {
    std::map<std::pair<Exp, Exp>, WeylElement> terms;  // (xi1,xi2) -> coefficient

    static TwoPointKernel lift(const WeylElement& w);
    bool is_zero() const { return terms.empty(); }
    void add_term(const std::pair<Exp, Exp>& xi, const WeylElement& w);
    TwoPointKernel operator+(const TwoPointKernel& o) const;
    TwoPointKernel operator*(const TwoPointKernel& o) const;
    TwoPointKernel operator*(const Scalar& c) const;
    bool operator==(const TwoPointKernel& o) const { return terms == o.terms; }
};

TwoPointKernel kernel_pow(const TwoPointKernel& a, int k);

// K_k = (1/k!)(-xi1 y + xi2 x)^k.
TwoPointKernel kernel_K(int k);

// Reproducing kernel of the degree-k monogenics:
//   Z_k = sum_j a_j^k K_{k-j} eta^j Xs^j,  eta = xi2 dq + i xi1 q,
// where the trailing Xs^j substitutes to Ds^j acting first on the argument.
TwoPointKernel kernel_Z(int k, int n = 1);

// The bilinear evaluation [f(xi1,xi2,dy,-dx,q,dq) g]_{x=y=0}; the result is a
// spinor whose base variables stand for (xi1, xi2).
Spinor kernel_pair(const TwoPointKernel& f, const Spinor& g);

struct AdjointReport {
    struct Entry {
        std::string relation;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

// Randomized verification of the six generator adjoints, Ds/Xs adjointness and
// the metaplectic skew-adjointness.
AdjointReport adjoint_table_check(std::uint64_t seed = 20240901);

}  // namespace sympclif
