#pragma once

#include <string>
#include <vector>

#include "sympclif/spinor.hpp"

namespace sympclif {

enum class Parity { Odd, Even };

// The positive real factor relating a returned exact representative to the
// literal (square-root-normalized) element: value = 2^log2_num/2 * pi^(pi4/4).
struct RescaleFactor {
    long log2_twice = 0;  // exponent of 2, doubled so half-integers stay exact
    int pi4 = 0;          // exponent of pi^(1/4)

    double value() const;
    std::string str() const;
};

// Real-coordinate monogenic basis element (n = 1), exactly as displayed:
// odd needs k >= h, even needs k >= 0.
Spinor basis_real(Parity parity, int h, int k);

// Complex-coordinate basis element in the exact rescaled representative:
//   odd:  sum_p binom(h,p)/((2k+2p+1)!! 2^p) h_{2k+2p+1} zbar^(h-p) z^p
//   even: sum_p binom(h,p)/((2k+2p)!!  2^p) h_{2k+2p}  zbar^(h-p) z^p
// with p from max(0,-k); differs from the square-root-normalized element by
// rescale_complex(parity, k). Even allows k >= -h.
Spinor basis_complex_rescaled(Parity parity, int h, int k);
RescaleFactor rescale_complex(Parity parity, int k);

// Exact representative of the 2^-h sum of even elements, rescale pi^(1/4).
Spinor basis_sE(int h, int l);
RescaleFactor rescale_sE();

// Exact kernel of Ds on {base degree h, fiber degree <= Q}. The image matrix
// keeps every coordinate including the q-degree Q+1 boundary, so truncation
// artifacts cannot be reported as kernel elements; every returned spinor is
// additionally certified by an exact apply(Ds, .) == 0 check.
std::vector<Spinor> monogenics_by_nullspace(int h, int Q, int n);

// Double factorial m!! with (-1)!! = 0!! = 1.
mpz_class double_factorial(long m);

}  // namespace sympclif
