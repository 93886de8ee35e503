#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sympclif/scalar.hpp"

namespace sympclif {

using Exp = std::uint32_t;

// Multiplication/derivative generator kinds; layout of an exponent vector of
// length 6n is [x_1..x_n, y_1..y_n, q_1..q_n, dx_1..dx_n, dy_1..dy_n, dq_1..dq_n].
enum class Gen : int { X = 0, Y = 1, Q = 2, Dx = 3, Dy = 4, Dq = 5 };

inline int gen_slot(Gen g, int j, int n) { return static_cast<int>(g) * n + (j - 1); }

using Mono = std::vector<Exp>;

// Normal-ordered element of the Weyl algebra in 3n multiplication generators
// and their derivatives: every stored monomial has all multiplications to the
// left of all derivatives, so equality is map equality.
struct WeylElement {
    int n = 1;
    std::map<Mono, Scalar> terms;

    explicit WeylElement(int dim = 1) : n(dim) {}

    static WeylElement zero(int n) { return WeylElement(n); }
    static WeylElement unit(int n, Scalar c = Scalar::one());
    static WeylElement generator(Gen g, int j, int n, Exp power = 1, Scalar c = Scalar::one());

    bool is_zero() const { return terms.empty(); }
    // Total order: max over monomials of the sum of all exponents.
    int order() const;

    void add_term(const Mono& m, const Scalar& c);

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator-() const;
    WeylElement operator*(const WeylElement& o) const;  // normal-ordered product
    WeylElement operator*(const Scalar& c) const;
    WeylElement& operator+=(const WeylElement& o);
    bool operator==(const WeylElement& o) const { return n == o.n && terms == o.terms; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    std::string str() const;  // canonical rendering, stable across runs
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);
WeylElement weyl_pow(const WeylElement& a, int k);

}  // namespace sympclif
