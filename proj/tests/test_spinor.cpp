#include <doctest.h>

#include <random>

#include "sympclif/oplib.hpp"
#include "sympclif/spinor.hpp"

using namespace sympclif;

namespace {

Spinor random_spinor(std::mt19937_64& rng, int n, int nterms = 3, int deg = 2) {
    std::uniform_int_distribution<int> dcoef(-3, 3);
    std::uniform_int_distribution<int> dvar(0, 3 * n - 1);
    std::uniform_int_distribution<int> ddeg(0, deg);
    Spinor s(n);
    for (int t = 0; t < nterms; ++t) {
        SMono m(3 * n, 0);
        int d = ddeg(rng);
        for (int i = 0; i < d; ++i) m[dvar(rng)] += 1;
        GaussRat c{make_rat(dcoef(rng)), make_rat(dcoef(rng))};
        if (c.is_zero()) c = GaussRat::of(1);
        s.add_term(m, Scalar::of_gauss(c));
    }
    return s;
}

WeylElement random_weyl(std::mt19937_64& rng, int n, int nterms = 3, int deg = 2) {
    std::uniform_int_distribution<int> dcoef(-3, 3);
    std::uniform_int_distribution<int> dvar(0, 6 * n - 1);
    std::uniform_int_distribution<int> ddeg(0, deg);
    WeylElement w(n);
    for (int t = 0; t < nterms; ++t) {
        Mono m(6 * n, 0);
        int d = ddeg(rng);
        for (int i = 0; i < d; ++i) m[dvar(rng)] += 1;
        GaussRat c{make_rat(dcoef(rng)), make_rat(dcoef(rng))};
        if (c.is_zero()) c = GaussRat::of(1);
        w.add_term(m, Scalar::of_gauss(c));
    }
    return w;
}

}  // namespace

TEST_CASE("gaussian derivative of the vacuum") {
    Spinor one = Spinor::unit(1);
    Spinor got = apply(WeylElement::generator(Gen::Dq, 1, 1), one);
    CHECK(got == Spinor::variable(Gen::Q, 1, 1) * Scalar::of(-1));
}

TEST_CASE("Xs on the vacuum") {
    Spinor got = apply(build(OpKind::Xs, 1), Spinor::unit(1));
    // q (i x - y)
    Spinor want(1);
    want.add_term(SMono{1, 0, 1}, Scalar::i());
    want.add_term(SMono{0, 1, 1}, Scalar::of(-1));
    CHECK(got == want);
    // Ds Xs 1 = -i
    CHECK(apply(build(OpKind::Ds, 1), got) == Spinor::unit(1, -Scalar::i()));
}

TEST_CASE("representation property on random pairs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + (trial % 2);
        WeylElement A = random_weyl(rng, n), B = random_weyl(rng, n);
        Spinor s = random_spinor(rng, n);
        CHECK(apply(A * B, s) == apply(A, apply(B, s)));
    }
}

TEST_CASE("unnormalized Hermite ladder") {
    CHECK(hermite_unnorm(0) == Spinor::unit(1));
    CHECK(hermite_unnorm(1) == Spinor::variable(Gen::Q, 1, 1) * Scalar::of(2));
    Spinor h3(1);
    h3.add_term(SMono{0, 0, 3}, Scalar::of(8));
    h3.add_term(SMono{0, 0, 1}, Scalar::of(-12));
    CHECK(hermite_unnorm(3) == h3);

    WeylElement lower = WeylElement::generator(Gen::Q, 1, 1) + WeylElement::generator(Gen::Dq, 1, 1);
    WeylElement number = WeylElement::generator(Gen::Q, 1, 1, 2) -
                         WeylElement::generator(Gen::Dq, 1, 1, 2);
    Spinor hk = hermite_unnorm(0);
    Spinor hk_prev(1);
    WeylElement raise = WeylElement::generator(Gen::Q, 1, 1) - WeylElement::generator(Gen::Dq, 1, 1);
    for (int k = 0; k <= 40; ++k) {
        CHECK(apply(lower, hk) == hk_prev * Scalar::of(2 * k));
        CHECK(apply(number, hk) == hk * Scalar::of(2 * k + 1));
        Spinor next = apply(raise, hk);
        hk_prev = hk;
        hk = next;
    }
}

TEST_CASE("grading") {
    Spinor s(1);
    s.add_term(SMono{1, 0, 0}, Scalar::one());       // x
    s.add_term(SMono{0, 3, 2}, Scalar::one());       // q^2 y^3
    auto parts = grade(s);
    CHECK(parts.size() == 2);
    CHECK(parts.count(1) == 1);
    CHECK(parts.count(3) == 1);
    Spinor x_only(1);
    x_only.add_term(SMono{1, 0, 0}, Scalar::one());
    CHECK(parts[1] == x_only);
    CHECK(grade(Spinor::unit(1)).begin()->first == 0);

    // each component is an E-eigenvector
    WeylElement E = build(OpKind::E, 1);
    Spinor xs1 = apply(build(OpKind::Xs, 1), Spinor::unit(1));
    auto g = grade(xs1);
    CHECK(g.size() == 1);
    CHECK(g.begin()->first == 1);
    CHECK(apply(E, g.begin()->second) == g.begin()->second);
}

TEST_CASE("base homogeneity detection") {
    int deg = -1;
    CHECK(base_homogeneous(Spinor::unit(1), deg));
    CHECK(deg == 0);
    Spinor mixed(1);
    mixed.add_term(SMono{1, 0, 0}, Scalar::one());
    mixed.add_term(SMono{0, 0, 1}, Scalar::one());
    CHECK_FALSE(base_homogeneous(mixed, deg));
}
