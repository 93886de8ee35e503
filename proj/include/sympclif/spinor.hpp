#pragma once

#include <map>
#include <string>
#include <vector>

#include "sympclif/weyl.hpp"

namespace sympclif {

using SMono = std::vector<Exp>;  // [x_1..x_n, y_1..y_n, q_1..q_n]

// Polynomial symplectic spinor: the polynomial coefficient of the fixed
// Gaussian fiber weight exp(-(q_1^2+...+q_n^2)/2). The weight itself is
// implicit; every operator in scope preserves polynomial-times-Gaussian,
// which is what keeps all computations exact.
struct Spinor {
    int n = 1;
    std::map<SMono, Scalar> terms;

    explicit Spinor(int dim = 1) : n(dim) {}

    static Spinor zero(int n) { return Spinor(n); }
    static Spinor unit(int n, Scalar c = Scalar::one());
    static Spinor monomial(int n, const SMono& m, Scalar c = Scalar::one());
    // x_j, y_j or q_j as a degree-one polynomial
    static Spinor variable(Gen g, int j, int n);

    bool is_zero() const { return terms.empty(); }
    void add_term(const SMono& m, const Scalar& c);

    Spinor operator+(const Spinor& o) const;
    Spinor operator-(const Spinor& o) const;
    Spinor operator-() const;
    Spinor operator*(const Scalar& c) const;
    bool operator==(const Spinor& o) const { return n == o.n && terms == o.terms; }
    bool operator!=(const Spinor& o) const { return !(*this == o); }

    std::string str() const;
};

// Action of a normal-ordered Weyl element: x,y,q multiply the polynomial part,
// dx,dy differentiate it, dq differentiates through the Gaussian (p -> p' - q p).
Spinor apply(const WeylElement& op, const Spinor& s);

// Unnormalized Hermite spinor h_k = (q - dq)^k . 1, n = 1; polynomial part is
// the physicists' Hermite polynomial H_k(q).
Spinor hermite_unnorm(int k);

// Split by total degree in the base variables x,y.
std::map<int, Spinor> grade(const Spinor& s);

int base_degree(const SMono& m, int n);
// Returns true and sets deg if every term has the same base degree (zero spinor: deg 0).
bool base_homogeneous(const Spinor& s, int& deg);

// Plain polynomial helpers on the coefficient polynomial (no Gaussian chain rule).
Spinor poly_mul(const Spinor& a, const Spinor& b);
Spinor poly_pow(const Spinor& a, int k);
Spinor poly_derivative(const Spinor& a, Gen g, int j);

// Coefficient-wise floating image with tau -> sqrt(pi), alpha -> alpha_value.
std::map<SMono, std::complex<double>> to_float(const Spinor& s,
                                               std::complex<double> alpha_value = {0.0, 0.0});
// max |coefficient difference| between float images, scaled by 1/scale_b on b.
double float_distance(const Spinor& a, const Spinor& b, double scale_a = 1.0, double scale_b = 1.0);

}  // namespace sympclif
