#pragma once

#include <vector>

#include "sympclif/spinor.hpp"
#include "sympclif/weyl.hpp"

namespace sympclif {

// Operator polynomial g_k^j(Xs) = sum_l beta_l Xs^l with
// beta_l = 2^l alpha^l binom(j,l) (2k+2n-1)!/(2k+2n-1+l)!, beta_0 = 1; the
// degree-j truncation of the generalized Laguerre polynomial of -2 alpha Xs.
struct LaguerreOpPoly {
    int j = 0, k = 0, n = 1;
    std::vector<Scalar> beta;  // beta[l] carries alpha^l

    WeylElement as_element() const;
};

LaguerreOpPoly laguerre_coeffs(int j, int k, int n);

// Conjugated-picture eigenvalue -i alpha (n + j + k).
Scalar eigenvalue(int j, int k, int n);

// Exact check of Ds(g m) - i alpha (E+n) g m = lambda g m with
// lambda = -i alpha (n+j+k), as a polynomial identity in alpha.
// Requires m base-homogeneous of degree k and Ds m = 0.
bool verify_conjugated_eigen(int j, int k, int n, const Spinor& m);

// Xs^k applied to the Gaussian vacuum, both by iterated application and by the
// closed-form sum k! (ix-y)^(k-m) q^(k-2m) y^m / (m! (k-2m)! 2^m); throws if
// the two routes disagree, returns the element. n = 1.
Spinor xs_power_gaussian(int k);

// Compares e^{alpha Xs} 1 with e^{alpha(ix-y)q + alpha^2 (ix-y)y/2} as formal
// power series in alpha, coefficient-wise up to total alpha-degree N.
bool exp_identity_truncated(int N);

}  // namespace sympclif
