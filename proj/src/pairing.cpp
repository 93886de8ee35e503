#include "sympclif/pairing.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sympclif/bases.hpp"
#include "sympclif/oplib.hpp"

namespace sympclif {

std::complex<double> PairingValue::to_float(std::complex<double> alpha_value) const {
    std::complex<double> v = value.to_float(alpha_value);
    return sqrt2 ? v * std::sqrt(2.0) : v;
}

Scalar gaussian_moment(int t) {
    if (t < 0) throw std::invalid_argument("gaussian_moment: negative order");
    Rat c(double_factorial(2L * t - 1), mpz_class(1) << t);
    c.canonicalize();
    return Scalar::of_rat(c) * Scalar::tau();
}

Scalar gaussian_moment_power(int m) {
    if (m < 0) throw std::invalid_argument("gaussian_moment_power: negative power");
    if (m % 2) return Scalar::zero();
    return gaussian_moment(m / 2);
}

Scalar gaussian_moment_as_printed(int t) {
    Rat c(2L * t + 1, mpz_class(1) << t);
    c.canonicalize();
    return Scalar::of_rat(c) * Scalar::tau();
}

namespace {

mpz_class factorial(long m) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

void require_n1(const Spinor& s, const char* who) {
    if (s.n != 1) throw std::invalid_argument(std::string(who) + ": defined for n = 1");
}

// base pairing <x^r y^s, x^t y^u> = (-1)^s r! s! delta_{s,t} delta_{r,u}
Scalar fischer_impl(const Spinor& a, const Spinor& b, bool conjugate_left) {
    Scalar acc = Scalar::zero();
    for (const auto& [ma, ca] : a.terms) {
        Exp r = ma[0], s = ma[1], qa = ma[2];
        Scalar left = conjugate_left ? ca.conj() : ca;
        for (const auto& [mb, cb] : b.terms) {
            if (mb[0] != s || mb[1] != r) continue;
            Scalar fiber = gaussian_moment_power(static_cast<int>(qa + mb[2]));
            if (fiber.is_zero()) continue;
            Rat base(factorial(r) * factorial(s));
            if (s % 2) base = -base;
            acc += left * cb * Scalar::of_rat(base) * fiber;
        }
    }
    return acc;
}

}  // namespace

PairingValue fischer(const Spinor& a, const Spinor& b) {
    require_n1(a, "fischer");
    require_n1(b, "fischer");
    return {fischer_impl(a, b, true), false};
}

PairingValue fischer_bilinear(const Spinor& a, const Spinor& b) {
    require_n1(a, "fischer_bilinear");
    require_n1(b, "fischer_bilinear");
    return {fischer_impl(a, b, false), false};
}

namespace {

// expand the base part into z^r zbar^s monomials: x = (z+zbar)/2, y = i(zbar-z)/2
std::map<SMono, Scalar> to_zz(const Spinor& s) {
    std::map<SMono, Scalar> out;
    Scalar half = Scalar::of(1, 2);
    Scalar minus_i_half = Scalar::of_gauss(GaussRat::i_times(-1, 2));
    Scalar i_half = Scalar::of_gauss(GaussRat::i_times(1, 2));
    for (const auto& [m, c] : s.terms) {
        Exp ex = m[0], ey = m[1], eq = m[2];
        for (Exp a2 = 0; a2 <= ex; ++a2) {
            for (Exp b2 = 0; b2 <= ey; ++b2) {
                mpz_class cb;
                mpz_bin_uiui(cb.get_mpz_t(), ex, a2);
                mpz_class cb2;
                mpz_bin_uiui(cb2.get_mpz_t(), ey, b2);
                Scalar coef = c * Scalar::of_rat(Rat(cb * cb2));
                for (Exp t = 0; t < ex; ++t) coef = coef * half;
                for (Exp t = 0; t < b2; ++t) coef = coef * minus_i_half;
                for (Exp t = 0; t < ey - b2; ++t) coef = coef * i_half;
                SMono key{a2 + b2, ex - a2 + ey - b2, eq};
                auto it = out.find(key);
                if (it == out.end()) {
                    if (!coef.is_zero()) out.emplace(key, coef);
                } else {
                    it->second += coef;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    }
    return out;
}

}  // namespace

PairingValue fischer1(const Spinor& a, const Spinor& b) {
    require_n1(a, "fischer1");
    require_n1(b, "fischer1");
    int h = 0;
    if (!base_homogeneous(a, h))
        throw std::invalid_argument("fischer1: left argument must be base-homogeneous");
    auto az = to_zz(a), bz = to_zz(b);
    Scalar acc = Scalar::zero();
    Rat hfac(factorial(h));
    for (const auto& [ma, ca] : az) {
        Exp r = ma[0], s = ma[1], qa = ma[2];
        for (const auto& [mb, cb] : bz) {
            if (mb[0] != r || mb[1] != s) continue;
            // fiber: dq through the Gaussian on the left factor, then integrate
            Scalar fiber = Scalar::zero();
            if (qa > 0)
                fiber += Scalar::of(static_cast<long>(qa)) *
                         gaussian_moment_power(static_cast<int>(qa - 1 + mb[2]));
            fiber = fiber - gaussian_moment_power(static_cast<int>(qa + 1 + mb[2]));
            if (fiber.is_zero()) continue;
            Rat base(factorial(r) * factorial(s));
            base /= hfac;
            acc += ca * cb * Scalar::of_rat(base) * fiber;
        }
    }
    return {acc, true};
}

TwoPointKernel TwoPointKernel::lift(const WeylElement& w) {
    TwoPointKernel k;
    if (!w.is_zero()) k.terms[{0, 0}] = w;
    return k;
}

void TwoPointKernel::add_term(const std::pair<Exp, Exp>& xi, const WeylElement& w) {
    if (w.is_zero()) return;
    auto it = terms.find(xi);
    if (it == terms.end()) {
        terms.emplace(xi, w);
        return;
    }
    it->second += w;
    if (it->second.is_zero()) terms.erase(it);
}

TwoPointKernel TwoPointKernel::operator+(const TwoPointKernel& o) const {
    TwoPointKernel r = *this;
    for (const auto& [xi, w] : o.terms) r.add_term(xi, w);
    return r;
}

TwoPointKernel TwoPointKernel::operator*(const TwoPointKernel& o) const {
    TwoPointKernel r;
    for (const auto& [x1, w1] : terms)
        for (const auto& [x2, w2] : o.terms)
            r.add_term({x1.first + x2.first, x1.second + x2.second}, w1 * w2);
    return r;
}

TwoPointKernel TwoPointKernel::operator*(const Scalar& c) const {
    TwoPointKernel r;
    for (const auto& [xi, w] : terms) r.add_term(xi, w * c);
    return r;
}

TwoPointKernel kernel_pow(const TwoPointKernel& a, int k) {
    TwoPointKernel r = TwoPointKernel::lift(WeylElement::unit(1));
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

TwoPointKernel kernel_K(int k) {
    if (k < 0) throw std::invalid_argument("kernel_K: negative degree");
    TwoPointKernel base;
    base.add_term({1, 0}, WeylElement::generator(Gen::Y, 1, 1) * Scalar::of(-1));
    base.add_term({0, 1}, WeylElement::generator(Gen::X, 1, 1));
    Rat c(1, factorial(k));
    c.canonicalize();
    return kernel_pow(base, k) * Scalar::of_rat(c);
}

TwoPointKernel kernel_Z(int k, int n) {
    if (n != 1) throw std::invalid_argument("kernel_Z: defined for n = 1");
    std::vector<Scalar> a = proj_sm_coeffs(k, 1);
    TwoPointKernel eta;  // Xs in the xi variables: xi2 dq + i xi1 q
    eta.add_term({0, 1}, WeylElement::generator(Gen::Dq, 1, 1));
    eta.add_term({1, 0}, WeylElement::generator(Gen::Q, 1, 1, 1, Scalar::i()));
    TwoPointKernel xs_elem = TwoPointKernel::lift(build(OpKind::Xs, 1));
    TwoPointKernel out;
    for (int j = 0; j <= k; ++j) {
        TwoPointKernel term = kernel_K(k - j) * kernel_pow(eta, j) * kernel_pow(xs_elem, j);
        out = out + term * a[j];
    }
    return out;
}

Spinor kernel_pair(const TwoPointKernel& f, const Spinor& g) {
    require_n1(g, "kernel_pair");
    Spinor out(1);
    for (const auto& [xi, w] : f.terms) {
        for (const auto& [mono, coef] : w.terms) {
            if (mono[3] || mono[4])
                throw std::invalid_argument("kernel_pair: kernel contains base derivatives");
            Exp ex = mono[0], ey = mono[1];
            WeylElement fiber(1);
            Mono fm(6, 0);
            fm[2] = mono[2];
            fm[5] = mono[5];
            fiber.terms[fm] = Scalar::one();
            Spinor t = apply(fiber, g);
            for (Exp e = 0; e < ex; ++e) t = poly_derivative(t, Gen::Y, 1);
            for (Exp e = 0; e < ey; ++e) t = poly_derivative(t, Gen::X, 1) * Scalar::of(-1);
            for (const auto& [m, c] : t.terms) {
                if (m[0] || m[1]) continue;  // evaluate at x = y = 0
                SMono key{xi.first, xi.second, m[2]};
                out.add_term(key, c * coef);
            }
        }
    }
    return out;
}

bool AdjointReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

Spinor random_spinor(std::mt19937_64& rng, int max_deg, int nterms) {
    std::uniform_int_distribution<int> dcoef(-4, 4);
    std::uniform_int_distribution<int> dvar(0, 2);
    std::uniform_int_distribution<int> dcnt(0, max_deg);
    Spinor s(1);
    for (int t = 0; t < nterms; ++t) {
        SMono m(3, 0);
        int deg = dcnt(rng);
        for (int i = 0; i < deg; ++i) m[dvar(rng)] += 1;
        GaussRat c{make_rat(dcoef(rng)), make_rat(dcoef(rng))};
        if (c.is_zero()) c = GaussRat::of(1);
        s.add_term(m, Scalar::of_gauss(c));
    }
    return s;
}

}  // namespace

AdjointReport adjoint_table_check(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    AdjointReport rep;
    struct Rule {
        std::string name;
        WeylElement left, right;
    };
    const int n = 1;
    auto g = [&](Gen gg) { return WeylElement::generator(gg, 1, n); };
    std::vector<Rule> rules = {
        {"<q a,b> = <a,q b>", g(Gen::Q), g(Gen::Q)},
        {"<dq a,b> = -<a,dq b>", g(Gen::Dq), -g(Gen::Dq)},
        {"<dx a,b> = <a,y b>", g(Gen::Dx), g(Gen::Y)},
        {"<dy a,b> = -<a,x b>", g(Gen::Dy), -g(Gen::X)},
        {"<x a,b> = <a,dy b>", g(Gen::X), g(Gen::Dy)},
        {"<y a,b> = -<a,dx b>", g(Gen::Y), -g(Gen::Dx)},
        {"<Ds a,b> = <a,Xs b>", build(OpKind::Ds, n), build(OpKind::Xs, n)},
        {"<Xs a,b> = -<a,Ds b>", build(OpKind::Xs, n), -build(OpKind::Ds, n)},
        {"<Xtilde a,b> = -<a,Xtilde b>", build(OpKind::Xtilde, n), -build(OpKind::Xtilde, n)},
        {"<Ytilde a,b> = -<a,Ytilde b>", build(OpKind::Ytilde, n), -build(OpKind::Ytilde, n)},
        {"<Htilde a,b> = -<a,Htilde b>", build(OpKind::Htilde, n), -build(OpKind::Htilde, n)},
    };
    for (const auto& rule : rules) {
        bool ok = true;
        for (int trial = 0; trial < 24 && ok; ++trial) {
            Spinor a = random_spinor(rng, 3, 3);
            Spinor b = random_spinor(rng, 3, 3);
            Scalar lhs = fischer(apply(rule.left, a), b).value;
            Scalar rhs = fischer(a, apply(rule.right, b)).value;
            ok = lhs == rhs;
        }
        rep.entries.push_back({rule.name, ok});
    }
    return rep;
}

}  // namespace sympclif
