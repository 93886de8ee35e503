#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace sympclif {

using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Gaussian rational re + im*i.
struct GaussRat {
    Rat re{0}, im{0};

    GaussRat() = default;
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat of(long num, long den = 1) { return {make_rat(num, den), Rat(0)}; }
    static GaussRat i_times(long num, long den = 1) { return {Rat(0), make_rat(num, den)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const;
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    bool operator<(const GaussRat& o) const {
        if (int c = cmp(re, o.re)) return c < 0;
        return cmp(im, o.im) < 0;
    }

    std::complex<double> to_float() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;
};

// Element of the coefficient ring Q(i)[tau, alpha]. tau stands for sqrt(pi)
// and alpha for the fixed root sqrt(2ic); both are free commuting symbols,
// rendered as "t" and "a". Canonical form: sorted exponent keys, no zero
// coefficients, so equality is representation equality.
class Scalar {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;  // (tau_exp, alpha_exp)

    Scalar() = default;

    static Scalar zero() { return {}; }
    static Scalar one() { return of(1); }
    static Scalar i() { return of_gauss(GaussRat::i_times(1)); }
    static Scalar tau();
    static Scalar alpha();
    static Scalar alpha_pow(std::uint32_t e, GaussRat c = GaussRat::of(1));
    static Scalar of(long num, long den = 1) { return of_gauss(GaussRat::of(num, den)); }
    static Scalar of_rat(const Rat& r) { return of_gauss(GaussRat{r, Rat(0)}); }
    static Scalar of_gauss(const GaussRat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;          // no tau/alpha content
    GaussRat constant() const;         // requires is_constant()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

    Scalar conj() const;  // i -> -i; tau, alpha fixed

    // Drop every term whose alpha-exponent exceeds max_deg.
    Scalar truncated_alpha(std::uint32_t max_deg) const;

    // tau -> sqrt(pi), alpha -> alpha_value.
    std::complex<double> to_float(std::complex<double> alpha_value = {0.0, 0.0}) const;

    std::string str() const;
    static Scalar parse(const std::string& text);  // inverse of str()

    const std::map<Key, GaussRat>& terms() const { return terms_; }

private:
    std::map<Key, GaussRat> terms_;
    void add_term(const Key& k, const GaussRat& c);
};

Scalar operator*(const GaussRat& c, const Scalar& s);

}  // namespace sympclif
