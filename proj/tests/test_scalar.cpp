#include <doctest.h>

#include <cmath>
#include <random>

#include "sympclif/scalar.hpp"

using namespace sympclif;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dnum(-20, 20);
    std::uniform_int_distribution<int> dden(1, 9);
    std::uniform_int_distribution<int> dexp(0, 2);
    Scalar s = Scalar::zero();
    for (int t = 0; t < 3; ++t) {
        Scalar term = Scalar::of_gauss(
            GaussRat{make_rat(dnum(rng), dden(rng)), make_rat(dnum(rng), dden(rng))});
        for (int e = dexp(rng); e > 0; --e) term = term * Scalar::tau();
        for (int e = dexp(rng); e > 0; --e) term = term * Scalar::alpha();
        s += term;
    }
    return s;
}

}  // namespace

TEST_CASE("gaussian integer norm") {
    Scalar one_plus_i = Scalar::one() + Scalar::i();
    Scalar one_minus_i = Scalar::one() - Scalar::i();
    CHECK(one_plus_i * one_minus_i == Scalar::of(2));
}

TEST_CASE("formal symbols do not collapse") {
    CHECK(Scalar::tau() * Scalar::tau() == Scalar::alpha_pow(0) * Scalar::tau() * Scalar::tau());
    CHECK((Scalar::tau() * Scalar::tau()).str() == "1*t^2");
    Scalar half_alpha = Scalar::of(1, 2) * Scalar::alpha();
    Scalar two_alpha = Scalar::of(2) * Scalar::alpha();
    CHECK(half_alpha * two_alpha == Scalar::alpha() * Scalar::alpha());
}

TEST_CASE("conjugation") {
    CHECK((Scalar::one() + Scalar::i()).conj() == Scalar::one() - Scalar::i());
    Scalar three_tau = Scalar::of(3) * Scalar::tau();
    CHECK(three_tau.conj() == three_tau);
    Scalar i_alpha = Scalar::i() * Scalar::alpha();
    CHECK(i_alpha.conj() == -i_alpha);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("to_float is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::complex<double> av{0.25, 1.5};
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        auto lhs = (a * b).to_float(av);
        auto rhs = a.to_float(av) * b.to_float(av);
        double scale = std::max(1.0, std::abs(lhs));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
        auto ls = (a + b).to_float(av);
        auto rs = a.to_float(av) + b.to_float(av);
        CHECK(std::abs(ls - rs) <= 1e-12 * std::max(1.0, std::abs(ls)));
    }
}

TEST_CASE("to_float evaluation points") {
    CHECK(Scalar::tau().to_float().real() == doctest::Approx(1.7724538509055160).epsilon(1e-12));
    CHECK(Scalar::of(2).to_float() == std::complex<double>(2.0, 0.0));
    auto v = (Scalar::i() * Scalar::alpha()).to_float({1.0, 0.0});
    CHECK(std::abs(v - std::complex<double>(0.0, 1.0)) < 1e-15);
}

TEST_CASE("canonical rendering and parse round-trip") {
    Scalar s = Scalar::of_gauss(GaussRat{make_rat(3, 2), make_rat(1, 2)}) * Scalar::tau() *
               Scalar::alpha() * Scalar::alpha();
    CHECK(s.str() == "(3/2 + 1/2*i)*t^1*a^2");
    CHECK(Scalar::parse(s.str()) == s);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK(Scalar::parse("0") == Scalar::zero());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("t^2") == Scalar::tau() * Scalar::tau());
}

TEST_CASE("denominators stay canonical") {
    // 2/6 must reduce and compare equal to 1/3
    CHECK(Scalar::of(2, 6) == Scalar::of(1, 3));
    CHECK(Scalar::of(1, -2) == Scalar::of(-1, 2));
}
