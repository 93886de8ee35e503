#include <doctest.h>

#include <random>

#include "sympclif/oplib.hpp"
#include "sympclif/weyl.hpp"

using namespace sympclif;

namespace {

WeylElement gen(Gen g, int j = 1, int n = 1) { return WeylElement::generator(g, j, n); }

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

TEST_CASE("defining relation") {
    CHECK(gen(Gen::Dx) * gen(Gen::X) ==
          gen(Gen::X) * gen(Gen::Dx) + WeylElement::unit(1));
    CHECK(gen(Gen::Q) * gen(Gen::Dq) == gen(Gen::Q) * gen(Gen::Dq));
    // dq q^2 = q^2 dq + 2q
    WeylElement q2 = WeylElement::generator(Gen::Q, 1, 1, 2);
    CHECK(gen(Gen::Dq) * q2 == q2 * gen(Gen::Dq) + gen(Gen::Q) * Scalar::of(2));
}

TEST_CASE("powers") {
    WeylElement X = build(OpKind::Xs, 1);
    CHECK(weyl_pow(X, 0) == WeylElement::unit(1));
    // Xs^2 = -x^2 q^2 + 2i x y q dq + i x y + y^2 dq^2
    WeylElement want(1);
    want.add_term(Mono{2, 0, 2, 0, 0, 0}, Scalar::of(-1));
    want.add_term(Mono{1, 1, 1, 0, 0, 1}, Scalar::of(2) * Scalar::i());
    want.add_term(Mono{1, 1, 0, 0, 0, 0}, Scalar::i());
    want.add_term(Mono{0, 2, 0, 0, 0, 2}, Scalar::one());
    CHECK(weyl_pow(X, 2) == want);
    WeylElement dx3 = weyl_pow(gen(Gen::Dx), 3);
    CHECK(dx3 == WeylElement::generator(Gen::Dx, 1, 1, 3));
}

TEST_CASE("commutator instances") {
    WeylElement X = build(OpKind::Xs, 1), D = build(OpKind::Ds, 1);
    CHECK(commutator(X, D) == euler_shifted(1) * Scalar::i());
    CHECK(commutator(euler_shifted(1), X) == X);
    // [Ds, Xs^2] = -i Xs - 2i Xs (E+1)
    WeylElement want = X * (-Scalar::i()) + X * euler_shifted(1) * (Scalar::of(-2) * Scalar::i());
    CHECK(commutator(D, weyl_pow(X, 2)) == want);
}

TEST_CASE("dimension mismatch throws") {
    CHECK_THROWS_AS(build(OpKind::Ds, 1) * build(OpKind::Ds, 2), std::invalid_argument);
}

TEST_CASE("associativity and Jacobi on random sparse elements") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + (trial % 2);
        WeylElement A = random_weyl(rng, n), B = random_weyl(rng, n), C = random_weyl(rng, n);
        CHECK((A * B) * C == A * (B * C));
        WeylElement jac = commutator(commutator(A, B), C) + commutator(commutator(B, C), A) +
                          commutator(commutator(C, A), B);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("degree filtration") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + (trial % 3);
        WeylElement A = random_weyl(rng, n, 3, 3), B = random_weyl(rng, n, 3, 3);
        CHECK((A * B).order() <= A.order() + B.order());
    }
}

TEST_CASE("metaplectic brackets against the matrix realization") {
    for (int n : {1, 2, 3}) {
        auto gens = sp_generators(n);
        for (const auto& a : gens) {
            WeylElement oa = sp_op_twisted(a, n);
            for (const auto& b : gens) {
                RatMatrix mc = mat_commutator(sp_matrix(a, n), sp_matrix(b, n));
                std::vector<Rat> coeffs = mat_expand(mc, gens, n);
                WeylElement want(n);
                for (size_t i = 0; i < gens.size(); ++i)
                    if (coeffs[i] != 0) want += sp_op_twisted(gens[i], n) * Scalar::of_rat(-coeffs[i]);
                CHECK(commutator(oa, sp_op_twisted(b, n)) == want);
            }
        }
    }
}

TEST_CASE("canonical rendering is stable") {
    WeylElement D = build(OpKind::Ds, 1);
    CHECK(D.str() == "i*q*dy + -1*dx*dq");
    CHECK(build(OpKind::Htilde, 1).str() == "1/2 + -1*x*dx + y*dy + q*dq");
    CHECK(WeylElement::zero(1).str() == "0");
    // n = 2 names carry indices
    CHECK(build(OpKind::Xs, 2).str() == "i*x1*q1 + i*x2*q2 + y1*dq1 + y2*dq2");
}
