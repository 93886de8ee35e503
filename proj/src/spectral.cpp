#include "sympclif/spectral.hpp"

#include <stdexcept>

#include "sympclif/oplib.hpp"

namespace sympclif {

namespace {

mpz_class factorial(long m) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

}  // namespace

LaguerreOpPoly laguerre_coeffs(int j, int k, int n) {
    if (j < 0 || k < 0 || n < 1) throw std::invalid_argument("laguerre_coeffs: bad arguments");
    LaguerreOpPoly p;
    p.j = j;
    p.k = k;
    p.n = n;
    for (int l = 0; l <= j; ++l) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), j, l);
        Rat c((mpz_class(1) << l) * bin * factorial(2 * k + 2 * n - 1),
              factorial(2 * k + 2 * n - 1 + l));
        c.canonicalize();
        p.beta.push_back(Scalar::alpha_pow(l, GaussRat{c, Rat(0)}));
    }
    return p;
}

WeylElement LaguerreOpPoly::as_element() const {
    WeylElement X = build(OpKind::Xs, n);
    WeylElement r(n);
    for (size_t l = 0; l < beta.size(); ++l) r += weyl_pow(X, static_cast<int>(l)) * beta[l];
    return r;
}

Scalar eigenvalue(int j, int k, int n) {
    return Scalar::alpha_pow(1, GaussRat::i_times(-(n + j + k)));
}

bool verify_conjugated_eigen(int j, int k, int n, const Spinor& m) {
    if (m.n != n) throw std::invalid_argument("verify_conjugated_eigen: dimension mismatch");
    int deg = 0;
    if (!base_homogeneous(m, deg) || deg != k)
        throw std::invalid_argument("verify_conjugated_eigen: m must be homogeneous of degree k");
    WeylElement D = build(OpKind::Ds, n);
    if (!apply(D, m).is_zero())
        throw std::invalid_argument("verify_conjugated_eigen: m is not monogenic");
    LaguerreOpPoly g = laguerre_coeffs(j, k, n);
    WeylElement En = euler_shifted(n);
    Spinor gm = apply(g.as_element(), m);
    Spinor lhs = apply(D, gm) - apply(En, gm) * (Scalar::i() * Scalar::alpha());
    Spinor rhs = gm * eigenvalue(j, k, n);
    return lhs == rhs;
}

Spinor xs_power_gaussian(int k) {
    if (k < 0) throw std::invalid_argument("xs_power_gaussian: negative power");
    WeylElement X = build(OpKind::Xs, 1);
    Spinor iter = Spinor::unit(1);
    for (int i = 0; i < k; ++i) iter = apply(X, iter);
    Spinor x = Spinor::variable(Gen::X, 1, 1);
    Spinor y = Spinor::variable(Gen::Y, 1, 1);
    Spinor q = Spinor::variable(Gen::Q, 1, 1);
    Spinor ix_minus_y = x * Scalar::i() - y;
    Spinor closed(1);
    for (int m = 0; 2 * m <= k; ++m) {
        Rat c(factorial(k), factorial(m) * factorial(k - 2 * m) * (mpz_class(1) << m));
        c.canonicalize();
        Spinor term = poly_mul(poly_pow(ix_minus_y, k - m), poly_pow(q, k - 2 * m));
        term = poly_mul(term, poly_pow(y, m));
        closed = closed + term * Scalar::of_rat(c);
    }
    if (!(iter == closed))
        throw std::runtime_error("xs_power_gaussian: closed form disagrees with iteration");
    return iter;
}

bool exp_identity_truncated(int N) {
    if (N < 0) throw std::invalid_argument("exp_identity_truncated: negative order");
    WeylElement X = build(OpKind::Xs, 1);
    // left: sum_k alpha^k / k! Xs^k . 1
    Spinor lhs(1);
    Spinor cur = Spinor::unit(1);
    mpz_class kfac = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            cur = apply(X, cur);
            kfac *= k;
        }
        Rat c(1, kfac);
        c.canonicalize();
        lhs = lhs + cur * Scalar::alpha_pow(k, GaussRat{c, Rat(0)});
    }
    // right: exp(alpha q (ix-y) + alpha^2 y (ix-y)/2), truncated at alpha^N
    Spinor x = Spinor::variable(Gen::X, 1, 1);
    Spinor y = Spinor::variable(Gen::Y, 1, 1);
    Spinor q = Spinor::variable(Gen::Q, 1, 1);
    Spinor ix_minus_y = x * Scalar::i() - y;
    Spinor p1 = poly_mul(ix_minus_y, q) * Scalar::alpha();                       // alpha-degree 1
    Spinor p2 = poly_mul(ix_minus_y, y) * Scalar::alpha_pow(2, GaussRat::of(1, 2));  // alpha-degree 2
    auto truncate = [&](const Spinor& s) {
        Spinor r(1);
        for (const auto& [m, c] : s.terms) r.add_term(m, c.truncated_alpha(N));
        return r;
    };
    Spinor rhs = Spinor::unit(1);
    Spinor power = Spinor::unit(1);  // (p1+p2)^m / m!
    Spinor p = p1 + p2;
    for (int m = 1; m <= N; ++m) {
        power = truncate(poly_mul(power, p)) * Scalar::of(1, m);
        rhs = rhs + power;
    }
    return truncate(lhs) == truncate(rhs);
}

}  // namespace sympclif
